// Copyright 2026 The peircelex Authors
// SPDX-License-Identifier: Apache-2.0

#include "peircelex/peircelex.h"

#include <exception>
#include <new>
#include <optional>
#include <string>

#include "acceptance.hpp"
#include "commands.hpp"
#include "peircelex/error.hpp"
#include "peircelex/grammar.hpp"

struct plx_lexicon {
  peircelex::Lexicon lex;
};

struct plx_buffer {
  std::string data;
};

namespace {

thread_local std::string last_error;

plx_status status_of(peircelex::ErrorKind kind) {
  using peircelex::ErrorKind;
  switch (kind) {
    case ErrorKind::Syntax: return PLX_ERR_SYNTAX;
    case ErrorKind::Type: return PLX_ERR_TYPE;
    case ErrorKind::NoParse: return PLX_ERR_NO_PARSE;
    case ErrorKind::MissingSymbol: return PLX_ERR_MISSING_SYMBOL;
    case ErrorKind::ShapeMismatch: return PLX_ERR_SHAPE_MISMATCH;
    case ErrorKind::Io: return PLX_ERR_IO;
    case ErrorKind::InvalidArgument: return PLX_ERR_INVALID_ARGUMENT;
    case ErrorKind::Unsupported: return PLX_ERR_UNSUPPORTED;
  }
  return PLX_ERR_INTERNAL;
}

plx_status fail(plx_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs body, mapping exceptions to status codes.
template <class F>
plx_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return PLX_OK;
  } catch (const peircelex::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PLX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PLX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(PLX_ERR_INTERNAL, "unknown failure");
  }
}

void require(const void* p, const char* what) {
  if (!p) throw peircelex::Error(peircelex::ErrorKind::InvalidArgument, std::string(what) + " is null");
}

std::optional<std::string> opt(const char* s) {
  if (!s || !*s) return std::nullopt;
  return std::string(s);
}

peircelex::cmd::Format format_of(plx_format f) {
  switch (f) {
    case PLX_FORMAT_TEXT: return peircelex::cmd::Format::Text;
    case PLX_FORMAT_JSON: return peircelex::cmd::Format::Json;
    case PLX_FORMAT_DOT: return peircelex::cmd::Format::Dot;
    case PLX_FORMAT_SVG: return peircelex::cmd::Format::Svg;
  }
  throw peircelex::Error(peircelex::ErrorKind::InvalidArgument, "unknown output format");
}

void emit(plx_buffer** out, std::string text) {
  *out = new plx_buffer{std::move(text)};
}

}  // namespace

extern "C" {

const char* plx_version(void) { return PEIRCELEX_VERSION; }

const char* plx_status_name(plx_status status) {
  switch (status) {
    case PLX_OK: return "ok";
    case PLX_ERR_SYNTAX: return "syntax-error";
    case PLX_ERR_TYPE: return "type-error";
    case PLX_ERR_NO_PARSE: return "no-parse";
    case PLX_ERR_MISSING_SYMBOL: return "missing-symbol";
    case PLX_ERR_SHAPE_MISMATCH: return "shape-mismatch";
    case PLX_ERR_IO: return "io-error";
    case PLX_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case PLX_ERR_UNSUPPORTED: return "unsupported";
    case PLX_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* plx_last_error(void) { return last_error.c_str(); }

plx_status plx_lexicon_load(const char* path, plx_lexicon** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new plx_lexicon{peircelex::Lexicon::load(path)};
  });
}

plx_status plx_lexicon_from_json(const char* text, plx_lexicon** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new plx_lexicon{peircelex::Lexicon::from_json(text)};
  });
}

void plx_lexicon_free(plx_lexicon* lex) { delete lex; }

plx_status plx_lexicon_default_target(const plx_lexicon* lex, plx_buffer** out) {
  return guarded([&] {
    require(lex, "lexicon");
    require(out, "out");
    emit(out, peircelex::cmd::resolve_target(lex->lex, std::nullopt).str());
  });
}

plx_status plx_parse(const plx_lexicon* lex, const char* sentence, const char* target, int all, plx_format format,
                     plx_buffer** out) {
  return guarded([&] {
    require(lex, "lexicon");
    require(sentence, "sentence");
    require(out, "out");
    auto t = peircelex::cmd::resolve_target(lex->lex, opt(target));
    emit(out, peircelex::cmd::parse(lex->lex, sentence, t, all != 0, format_of(format)));
  });
}

plx_status plx_meaning(const plx_lexicon* lex, const char* sentence, const char* target, unsigned flags,
                       plx_format format, plx_buffer** out) {
  return guarded([&] {
    require(lex, "lexicon");
    require(sentence, "sentence");
    require(out, "out");
    peircelex::cmd::MeaningOptions o;
    o.logic = flags & PLX_MEANING_LOGIC;
    o.all = flags & PLX_MEANING_ALL;
    o.singletons = flags & PLX_MEANING_SINGLETONS;
    o.format = format_of(format);
    auto t = peircelex::cmd::resolve_target(lex->lex, opt(target));
    emit(out, peircelex::cmd::meaning(lex->lex, sentence, t, o));
  });
}

plx_status plx_draw(const plx_lexicon* lex, const char* sentence, const char* target, plx_format format,
                    plx_buffer** out) {
  return guarded([&] {
    require(lex, "lexicon");
    require(sentence, "sentence");
    require(out, "out");
    auto t = peircelex::cmd::resolve_target(lex->lex, opt(target));
    emit(out, peircelex::cmd::draw(lex->lex, sentence, t, format_of(format)));
  });
}

plx_status plx_eval(const plx_lexicon* lex, const char* sentence, const char* target, plx_backend backend,
                    const char* data_path, plx_buffer** out) {
  return guarded([&] {
    require(lex, "lexicon");
    require(sentence, "sentence");
    require(data_path, "data path");
    require(out, "out");
    peircelex::cmd::Backend b;
    switch (backend) {
      case PLX_BACKEND_FOL: b = peircelex::cmd::Backend::Fol; break;
      case PLX_BACKEND_REL: b = peircelex::cmd::Backend::Rel; break;
      case PLX_BACKEND_VECT: b = peircelex::cmd::Backend::Vect; break;
      default: throw peircelex::Error(peircelex::ErrorKind::InvalidArgument, "unknown backend");
    }
    auto t = peircelex::cmd::resolve_target(lex->lex, opt(target));
    emit(out, peircelex::cmd::eval(lex->lex, sentence, t, b, data_path));
  });
}

plx_status plx_check_equiv(const plx_lexicon* montague, const plx_lexicon* peirce, const char* sentence,
                           unsigned max_universe, plx_buffer** report, int* equivalent) {
  return guarded([&] {
    require(montague, "montague lexicon");
    require(peirce, "peirce lexicon");
    require(sentence, "sentence");
    require(report, "report");
    if (max_universe == 0) throw peircelex::Error(peircelex::ErrorKind::InvalidArgument, "max universe must be positive");
    auto r = peircelex::cmd::check_equiv(montague->lex, peirce->lex, sentence, max_universe);
    if (equivalent) *equivalent = r.equivalent;
    emit(report, std::move(r.text));
  });
}

plx_status plx_selftest(const char* lexicon_dir, plx_buffer** report, int* all_passed) {
  return guarded([&] {
    require(lexicon_dir, "lexicon directory");
    require(report, "report");
    auto results = peircelex::acceptance::run(lexicon_dir);
    if (all_passed) *all_passed = peircelex::acceptance::all_passed(results);
    emit(report, peircelex::acceptance::report(results));
  });
}

const char* plx_buffer_data(const plx_buffer* buf) { return buf ? buf->data.c_str() : ""; }

size_t plx_buffer_size(const plx_buffer* buf) { return buf ? buf->data.size() : 0; }

void plx_buffer_free(plx_buffer* buf) { delete buf; }

}  // extern "C"
