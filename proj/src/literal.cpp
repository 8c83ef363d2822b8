#include "naca/literal.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace naca {

namespace {

// Recursive-descent cursor over a literal string. Malformed input is reported
// as SyntaxError with a 1-based position; well-formed input that does not fit
// the supplied field context is reported as ContextMismatch.
class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  [[noreturn]] void syntax(const std::string& msg, size_t at) const {
    fail(Err::SyntaxError, "position " + std::to_string(at + 1) + ": " + msg);
  }
  [[noreturn]] void context(const std::string& msg, size_t at) const {
    fail(Err::ContextMismatch, "position " + std::to_string(at + 1) + ": " + msg);
  }

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    ws();
    return pos_ >= s_.size();
  }
  char peek() {
    ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool try_consume(char c) {
    ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      syntax(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  void finish() {
    ws();
    if (pos_ < s_.size()) syntax("unexpected trailing input", pos_);
  }
  size_t pos() const { return pos_; }

  int64_t integer() {
    ws();
    size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      syntax("expected an integer", start);
    int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > (int64_t(1) << 50)) syntax("integer literal too large", start);
      ++pos_;
    }
    return neg ? -v : v;
  }

  // ---- element grammars ----

  FqElem fq(const FqSpecPtr& spec) {
    size_t start = pos_;
    expect('[');
    std::vector<int64_t> c;
    if (!try_consume(']')) {
      while (true) {
        c.push_back(((integer() % spec->p) + spec->p) % spec->p);
        if (try_consume(']')) break;
        expect(',');
      }
    }
    if (static_cast<int>(c.size()) > spec->n)
      context("too many coefficients for a degree-" + std::to_string(spec->n) + " residue field",
              start);
    c.resize(spec->n, 0);
    return FqElem(spec, std::move(c));
  }

  LocalElem local(const LocalFieldSpecPtr& spec) {
    ws();
    size_t start = pos_;
    char c = peek();
    if (c == 'O') return local_fuzzy_zero(spec);
    if (c == '[') return local_digit_list(spec);
    if (c == 't' && spec->kind == LocalKind::Laurent) return local_series(spec, start);
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      int64_t v = integer();
      ws();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        // full positional form: the number just read names the uniformizer
        if (spec->kind != LocalKind::Padic || v != spec->p)
          context("uniformizer '" + std::to_string(v) + "' does not match this field (expected " +
                      spec->uniformizer_symbol() + ")",
                  start);
        return local_series(spec, start, /*symbol_consumed=*/true);
      }
      if (v == 0) return LocalElem::exact_zero(spec);
      return LocalElem::from_int(spec, v);
    }
    syntax("expected a local-field element literal", start);
  }

  template <class B>
  ExtElem<B> ext(const ExtPtr<B>& e) {
    size_t start = pos_;
    expect('(');
    std::vector<B> c;
    while (true) {
      c.push_back(base_elem<B>(e->base));
      if (try_consume(')')) break;
      expect(',');
    }
    if (static_cast<int>(c.size()) != e->m)
      context("expected " + std::to_string(e->m) + " components for " + e->name, start);
    return ExtElem<B>(e, std::move(c));
  }

  template <class B>
  AlgElem<B> alg(const AlgPtr<B>& a) {
    size_t start = pos_;
    expect('[');
    std::vector<ExtElem<B>> c;
    while (true) {
      c.push_back(ext<B>(a->ext));
      if (try_consume(']')) break;
      expect(';');
    }
    if (static_cast<int>(c.size()) != a->ext->m)
      context("expected " + std::to_string(a->ext->m) + " coefficients for " + a->name, start);
    return AlgElem<B>(a, std::move(c));
  }

 private:
  template <class B>
  B base_elem(const typename FieldOps<B>::SpecPtr& spec);

  // consume the uniformizer symbol; `already` means the p-adic prime was read
  // by the caller during disambiguation
  void uniformizer(const LocalFieldSpecPtr& spec, bool already = false) {
    if (already) return;
    ws();
    size_t start = pos_;
    if (spec->kind == LocalKind::Laurent) {
      if (pos_ >= s_.size() || s_[pos_] != 't') syntax("expected uniformizer 't'", start);
      ++pos_;
      return;
    }
    int64_t v = integer();
    if (v != spec->p)
      context("uniformizer '" + std::to_string(v) + "' does not match this field (expected " +
                  spec->uniformizer_symbol() + ")",
              start);
  }

  LocalElem local_fuzzy_zero(const LocalFieldSpecPtr& spec) {
    expect('O');
    expect('(');
    uniformizer(spec);
    expect('^');
    int64_t k = integer();
    expect(')');
    return LocalElem::zero_to_precision(spec, k);
  }

  // shorthand [d0,d1,...]: p-adic digit list at valuation 0; for Laurent
  // fields the bracket is a single residue-field digit
  LocalElem local_digit_list(const LocalFieldSpecPtr& spec) {
    if (spec->kind == LocalKind::Laurent) {
      FqElem d = fq(spec->residue);
      return LocalElem::from_residue(spec, d, spec->default_precision);
    }
    size_t start = pos_;
    expect('[');
    std::vector<FqElem> ds;
    while (true) {
      size_t at = pos_;
      int64_t d = integer();
      if (d < 0 || d >= spec->p) context("digit out of range [0, p)", at);
      ds.push_back(FqElem::from_int(spec->residue, d));
      if (try_consume(']')) break;
      expect(',');
    }
    if (ds.empty()) syntax("empty digit list", start);
    return LocalElem::from_digits(spec, 0, std::move(ds)).padded(spec->default_precision);
  }

  FqElem local_digit(const LocalFieldSpecPtr& spec) {
    if (spec->kind == LocalKind::Laurent) return fq(spec->residue);
    size_t at = pos_;
    int64_t d = integer();
    if (d < 0 || d >= spec->p) context("digit out of range [0, p)", at);
    return FqElem::from_int(spec->residue, d);
  }

  // pi^v*(d0 + d1*pi + ... + O(pi^N))
  LocalElem local_series(const LocalFieldSpecPtr& spec, size_t start, bool symbol_consumed = false) {
    uniformizer(spec, symbol_consumed);
    expect('^');
    int64_t v = integer();
    expect('*');
    expect('(');
    std::vector<std::pair<int64_t, FqElem>> placed;
    int64_t rel_prec = -1;
    while (true) {
      ws();
      if (peek() == 'O') {
        expect('O');
        expect('(');
        uniformizer(spec);
        expect('^');
        size_t at = pos_;
        rel_prec = integer();
        if (rel_prec < 1) syntax("precision must be positive", at);
        expect(')');
        expect(')');
        break;
      }
      FqElem d = local_digit(spec);
      int64_t idx = 0;
      ws();
      if (try_consume('*')) {
        uniformizer(spec);
        if (try_consume('^'))
          idx = integer();
        else
          idx = 1;
      }
      placed.emplace_back(idx, d);
      expect('+');
    }
    std::vector<FqElem> ds(rel_prec, FqElem::zero(spec->residue));
    for (auto& [idx, d] : placed) {
      if (idx < 0 || idx >= rel_prec)
        syntax("digit index " + std::to_string(idx) + " outside the stated precision window",
               start);
      if (!ds[idx].is_zero()) syntax("duplicate digit index " + std::to_string(idx), start);
      ds[idx] = d;
    }
    return LocalElem::from_digits(spec, v, std::move(ds));
  }

  const std::string& s_;
  size_t pos_ = 0;
};

template <>
FqElem Parser::base_elem<FqElem>(const FqSpecPtr& spec) {
  return fq(spec);
}

template <>
LocalElem Parser::base_elem<LocalElem>(const LocalFieldSpecPtr& spec) {
  return local(spec);
}

}  // namespace

FqElem parse_fq(const FqSpecPtr& spec, const std::string& text) {
  Parser p(text);
  FqElem x = p.fq(spec);
  p.finish();
  return x;
}

LocalElem parse_local(const LocalFieldSpecPtr& spec, const std::string& text) {
  Parser p(text);
  LocalElem x = p.local(spec);
  p.finish();
  return x;
}

ExtElem<FqElem> parse_ext(const FqExtPtr& ext, const std::string& text) {
  Parser p(text);
  auto x = p.ext<FqElem>(ext);
  p.finish();
  return x;
}

ExtElem<LocalElem> parse_ext(const LocalExtPtr& ext, const std::string& text) {
  Parser p(text);
  auto x = p.ext<LocalElem>(ext);
  p.finish();
  return x;
}

AlgElem<FqElem> parse_alg(const AlgPtr<FqElem>& alg, const std::string& text) {
  Parser p(text);
  auto x = p.alg<FqElem>(alg);
  p.finish();
  return x;
}

AlgElem<LocalElem> parse_alg(const AlgPtr<LocalElem>& alg, const std::string& text) {
  Parser p(text);
  auto x = p.alg<LocalElem>(alg);
  p.finish();
  return x;
}

}  // namespace naca
