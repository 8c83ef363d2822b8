// Command-line front end for the nonassociative cyclic algebra library.
//
// Field descriptors:     Qp:<p>            the p-adic field Q_p
//                        Laurent:<q>       F_q((t)), q a prime power
// Extension descriptors: unram:<m>         the unramified degree-m extension
//                        sqrt:<c>          F(sqrt(c)), c an integer
//                        kummer:<m>:<b>    F(b^(1/m)), b an integer
//                        as:<v>            Artin-Schreier F(alpha),
//                                          alpha^2 + alpha = t^v (char 2)
// Element literals follow the grammars documented in naca/literal.hpp.
//
// Exit codes: 0 success; 2 malformed literal (syntax error); 3 unsupported
// case; 4 insufficient precision; 5 resource guard exceeded; 1 anything else.

#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "naca/classify.hpp"
#include "naca/literal.hpp"
#include "naca/oracle.hpp"

using json = nlohmann::json;
using namespace naca;

namespace {

constexpr int kSchemaVersion = 1;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

int64_t descriptor_int(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    int64_t v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (...) {
  }
  fail(Err::SyntaxError, what + ": expected an integer, got '" + s + "'");
}

LocalFieldSpecPtr make_field(const std::string& desc, int precision) {
  auto parts = split(desc, ':');
  if (parts.size() == 2 && parts[0] == "Qp")
    return padic_field(descriptor_int(parts[1], "field descriptor"), precision);
  if (parts.size() == 2 && parts[0] == "Laurent") {
    int64_t q = descriptor_int(parts[1], "field descriptor");
    if (q < 2) fail(Err::SyntaxError, "field descriptor: q must be at least 2");
    int64_t p = 2;
    while (q % p != 0) ++p;
    int n = 0;
    int64_t rest = q;
    while (rest > 1) {
      if (rest % p != 0)
        fail(Err::SyntaxError, "field descriptor: " + std::to_string(q) + " is not a prime power");
      rest /= p;
      ++n;
    }
    return laurent_field(fq_make(p, n), precision);
  }
  fail(Err::SyntaxError, "unknown field descriptor '" + desc + "' (expected Qp:<p> or Laurent:<q>)");
}

LocalExtPtr make_ext(const LocalFieldSpecPtr& F, const std::string& desc) {
  auto parts = split(desc, ':');
  int prec = F->default_precision;
  if (parts.size() == 2 && parts[0] == "unram")
    return unramified_ext(F, static_cast<int>(descriptor_int(parts[1], "extension descriptor")));
  if (parts.size() == 2 && parts[0] == "sqrt")
    return quadratic_ext(
        F, LocalElem::from_int(F, descriptor_int(parts[1], "extension descriptor"), prec));
  if (parts.size() == 3 && parts[0] == "kummer")
    return kummer_ext(
        F, static_cast<int>(descriptor_int(parts[1], "extension descriptor")),
        LocalElem::from_int(F, descriptor_int(parts[2], "extension descriptor"), prec));
  if (parts.size() == 2 && parts[0] == "as")
    return artin_schreier_ext(
        F, LocalElem::one(F, prec).shifted(descriptor_int(parts[1], "extension descriptor")));
  fail(Err::SyntaxError, "unknown extension descriptor '" + desc +
                             "' (expected unram:<m>, sqrt:<c>, kummer:<m>:<b> or as:<v>)");
}

struct Output {
  bool machine = false;
  json j;

  void emit_text(const std::string& line) {
    if (!machine) std::cout << line << "\n";
  }
  void flush() {
    if (machine) {
      j["schema_version"] = kSchemaVersion;
      std::cout << j.dump(2) << "\n";
    }
  }
};

json canon_to_json(const CanonicalParam<LocalElem>& c) {
  return json{{"extension", c.ext->name},
              {"m", c.ext->m},
              {"generator_power", c.generator_power},
              {"a", c.a.str()},
              {"case_tag", c.case_tag},
              {"precision", c.precision_used}};
}

void print_canon(Output& out, const CanonicalParam<LocalElem>& c) {
  out.emit_text("extension:       " + c.ext->name);
  out.emit_text("generator power: " + std::to_string(c.generator_power));
  out.emit_text("canonical a:     " + c.a.str());
  out.emit_text("case tag:        " + c.case_tag);
  out.emit_text("precision used:  " + std::to_string(c.precision_used));
}

CanonicalParam<LocalElem> dispatch_canonical(const LocalExtPtr& E, const ExtElem<LocalElem>& a,
                                             const std::optional<LocalElem>& gamma) {
  if (E->kind == ExtKind::ArtinSchreier) return char2_canonical(E, gamma, a);
  if (E->m == 2) return quaternion_canonical(E, a);
  if (E->m % 2 == 1 && is_prime_int(E->m)) return prime_canonical(E, a);
  fail(Err::UnsupportedCase, "no canonical form implemented for degree " + std::to_string(E->m));
}

std::vector<CanonicalParam<LocalElem>> dispatch_enumerate(const LocalExtPtr& E, const Window& w) {
  if (E->m == 2 && E->kind != ExtKind::ArtinSchreier) return quaternion_enumerate(E, w);
  if (E->m % 2 == 1 && is_prime_int(E->m)) return prime_enumerate(E, w);
  fail(Err::UnsupportedCase, "no enumeration implemented for this extension");
}

void split_prime_power(int64_t q, int64_t& p, int& n) {
  if (q < 2) fail(Err::SyntaxError, "q must be at least 2");
  p = 2;
  while (q % p != 0) ++p;
  n = 0;
  int64_t rest = q;
  while (rest > 1) {
    if (rest % p != 0) fail(Err::SyntaxError, std::to_string(q) + " is not a prime power");
    rest /= p;
    ++n;
  }
}

int run(int argc, char** argv) {
  CLI::App app{"exact arithmetic and classification for nonassociative cyclic algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  int exit_code = 0;
  int precision = 12;
  std::string field_desc, ext_desc;
  app.add_flag("--machine", out.machine, "emit machine-readable JSON");
  app.add_option("--precision", precision, "working precision (digits)")->capture_default_str();

  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--field", field_desc, "field descriptor (Qp:<p> or Laurent:<q>)")->required();
  };
  auto add_ext = [&](CLI::App* cmd) {
    cmd->add_option("--ext", ext_desc, "extension descriptor")->required();
  };

  // ---- field-info ----
  auto* fi = app.add_subcommand("field-info", "describe a base field");
  add_field(fi);
  fi->callback([&] {
    auto F = make_field(field_desc, precision);
    out.emit_text(std::string("kind:               ") +
                  (F->kind == LocalKind::Padic ? "p-adic" : "Laurent series"));
    out.emit_text("residual char p:    " + std::to_string(F->p));
    out.emit_text("residue field size: " + std::to_string(F->q()));
    out.emit_text("uniformizer:        " + F->uniformizer_symbol());
    out.emit_text("default precision:  " + std::to_string(F->default_precision));
    out.j = {{"kind", F->kind == LocalKind::Padic ? "padic" : "laurent"},
             {"p", F->p},
             {"q", F->q()},
             {"uniformizer", F->uniformizer_symbol()},
             {"default_precision", F->default_precision}};
  });

  // ---- ext make | list | norms ----
  auto* ext_cmd = app.add_subcommand("ext", "cyclic extensions of a base field");
  auto* ext_make = ext_cmd->add_subcommand("make", "construct an extension and describe it");
  add_field(ext_make);
  add_ext(ext_make);
  ext_make->callback([&] {
    auto F = make_field(field_desc, precision);
    auto E = make_ext(F, ext_desc);
    out.emit_text("name:     " + E->name);
    out.emit_text("degree m: " + std::to_string(E->m));
    out.emit_text("kind:     " + std::string(ext_kind_name(E->kind)));
    out.emit_text(std::string("ramified: ") + (E->ramified ? "yes" : "no"));
    out.j = {{"name", E->name},
             {"m", E->m},
             {"kind", ext_kind_name(E->kind)},
             {"ramified", E->ramified}};
  });

  int list_m = 2;
  auto* ext_list = ext_cmd->add_subcommand("list", "list the degree-m extensions of a field");
  add_field(ext_list);
  ext_list->add_option("--m", list_m, "extension degree")->required();
  ext_list->callback([&] {
    auto F = make_field(field_desc, precision);
    auto exts = enumerate_extensions(F, list_m);
    json arr = json::array();
    for (const auto& E : exts) {
      std::ostringstream line;
      line << E->name;
      json rec{{"name", E->name}, {"ramified", E->ramified}, {"kind", ext_kind_name(E->kind)}};
      if (E->arithmetic_ok && F->kind == LocalKind::Padic && F->p == 2 && E->m == 2) {
        // norm membership across the eight square classes of Q_2
        std::vector<int> norms;
        for (int c : {1, -1, 2, -2, 3, -3, 6, -6})
          if (is_norm(E, LocalElem::from_int(F, c, precision))) norms.push_back(c);
        line << "  norms among {1,-1,2,-2,3,-3,6,-6}: {";
        for (size_t i = 0; i < norms.size(); ++i) line << (i ? "," : "") << norms[i];
        line << "}";
        rec["norm_classes"] = norms;
      }
      out.emit_text(line.str());
      arr.push_back(rec);
    }
    out.j = {{"extensions", arr}};
  });

  std::string x_lit, y_lit, z_lit;
  auto* ext_norms = ext_cmd->add_subcommand(
      "norms", "norm-class representatives, or membership of a given element");
  add_field(ext_norms);
  add_ext(ext_norms);
  ext_norms->add_option("--x", x_lit, "base-field element to test for norm membership");
  ext_norms->callback([&] {
    auto F = make_field(field_desc, precision);
    auto E = make_ext(F, ext_desc);
    if (!x_lit.empty()) {
      bool member = is_norm(E, parse_local(F, x_lit));
      out.emit_text(std::string("is a norm: ") + (member ? "yes" : "no"));
      out.j = {{"extension", E->name}, {"x", x_lit}, {"is_norm", member}};
      return;
    }
    auto reps = norm_class_reps(E);
    json arr = json::array();
    for (const auto& r : reps) {
      out.emit_text(r.str());
      arr.push_back(r.str());
    }
    bool m1 = minus_one_is_norm(E);
    out.emit_text(std::string("-1 is a norm: ") + (m1 ? "yes" : "no"));
    out.j = {{"extension", E->name}, {"representatives", arr}, {"minus_one_is_norm", m1}};
  });

  // ---- alg mul | assoc | nuclei | division ----
  auto* alg_cmd = app.add_subcommand("alg", "arithmetic and structure of a cyclic algebra");
  int j_power = 1;
  std::string a_lit, b_lit;
  auto add_alg = [&](CLI::App* cmd) {
    add_field(cmd);
    add_ext(cmd);
    cmd->add_option("--j", j_power, "generator power (sigma^j)")->capture_default_str();
    cmd->add_option("--a", a_lit, "structure constant a (extension element literal)")->required();
  };
  auto build_alg = [&] {
    auto F = make_field(field_desc, precision);
    auto E = make_ext(F, ext_desc);
    return alg_make(E, j_power, parse_ext(E, a_lit));
  };

  auto* alg_mul = alg_cmd->add_subcommand("mul", "multiply two algebra elements");
  add_alg(alg_mul);
  alg_mul->add_option("--x", x_lit, "left factor (algebra element literal)")->required();
  alg_mul->add_option("--y", y_lit, "right factor")->required();
  alg_mul->callback([&] {
    auto A = build_alg();
    auto p = parse_alg(A, x_lit) * parse_alg(A, y_lit);
    out.emit_text(p.str());
    out.j = {{"algebra", A->name}, {"product", p.str()}};
  });

  auto* alg_assoc = alg_cmd->add_subcommand("assoc", "associator [x, y, z]");
  add_alg(alg_assoc);
  alg_assoc->add_option("--x", x_lit, "first argument")->required();
  alg_assoc->add_option("--y", y_lit, "second argument")->required();
  alg_assoc->add_option("--z", z_lit, "third argument")->required();
  alg_assoc->callback([&] {
    auto A = build_alg();
    auto r = associator(parse_alg(A, x_lit), parse_alg(A, y_lit), parse_alg(A, z_lit));
    out.emit_text(r.str());
    out.j = {{"algebra", A->name}, {"associator", r.str()}};
  });

  auto* alg_nuc = alg_cmd->add_subcommand("nuclei", "nucleus and center dimensions over F");
  add_alg(alg_nuc);
  alg_nuc->callback([&] {
    auto A = build_alg();
    json dims;
    for (auto kind : {NucleusKind::Left, NucleusKind::Middle, NucleusKind::Right,
                      NucleusKind::Nucleus, NucleusKind::Center}) {
      auto basis = nucleus(A, kind);
      out.emit_text(std::string(nucleus_kind_name(kind)) + ": dimension " +
                    std::to_string(basis.size()));
      dims[nucleus_kind_name(kind)] = basis.size();
    }
    auto info = right_nucleus_structure(A);
    out.emit_text("right nucleus structure: " + info.description);
    out.j = {{"algebra", A->name},
             {"dimensions", dims},
             {"right_nucleus", {{"subfield_degree", info.subfield_deg},
                                {"dim_over_F", info.dim_over_F},
                                {"description", info.description}}}};
  });

  auto* alg_div = alg_cmd->add_subcommand("division", "decide whether the algebra is division");
  add_alg(alg_div);
  alg_div->callback([&] {
    auto A = build_alg();
    auto rep = is_division(A);
    const char* verdict = rep.result == Tri::True    ? "yes"
                          : rep.result == Tri::False ? "no"
                                                     : "unknown";
    out.emit_text(std::string("division algebra: ") + verdict);
    out.emit_text("method: " + rep.method);
    out.j = {{"algebra", A->name}, {"division", verdict}, {"method", rep.method}};
  });

  // ---- classify canon | equiv | iso | enumerate | degree4 ----
  auto* cls = app.add_subcommand("classify", "canonical forms and isomorphism classification");

  std::string gamma_lit;
  auto* canon = cls->add_subcommand("canon", "canonical representative of the class of a");
  add_field(canon);
  add_ext(canon);
  canon->add_option("--a", a_lit, "structure constant (extension element literal)")->required();
  canon->add_option("--gamma", gamma_lit,
                    "norm-class representative for Artin-Schreier extensions (optional)");
  canon->callback([&] {
    auto F = make_field(field_desc, precision);
    auto E = make_ext(F, ext_desc);
    std::optional<LocalElem> gamma;
    if (!gamma_lit.empty()) gamma = parse_local(F, gamma_lit);
    auto c = dispatch_canonical(E, parse_ext(E, a_lit), gamma);
    print_canon(out, c);
    out.j = canon_to_json(c);
  });

  auto* equiv = cls->add_subcommand("equiv", "are a and b equivalent structure constants?");
  add_field(equiv);
  add_ext(equiv);
  equiv->add_option("--a", a_lit, "first structure constant")->required();
  equiv->add_option("--b", b_lit, "second structure constant")->required();
  equiv->callback([&] {
    auto F = make_field(field_desc, precision);
    auto E = make_ext(F, ext_desc);
    bool eq = equivalent(E, parse_ext(E, a_lit), parse_ext(E, b_lit));
    out.emit_text(eq ? "equivalent" : "not equivalent");
    out.j = {{"extension", E->name}, {"equivalent", eq}};
  });

  std::string ext2_desc;
  int j2_power = 0;
  auto* iso = cls->add_subcommand("iso", "are (K/F, sigma^j, a) and (K'/F, sigma^j', b) isomorphic?");
  add_field(iso);
  add_ext(iso);
  iso->add_option("--j", j_power, "generator power of the first algebra")->capture_default_str();
  iso->add_option("--a", a_lit, "structure constant of the first algebra")->required();
  iso->add_option("--ext2", ext2_desc, "extension of the second algebra (defaults to --ext)");
  iso->add_option("--j2", j2_power, "generator power of the second algebra (defaults to --j)");
  iso->add_option("--b", b_lit, "structure constant of the second algebra")->required();
  iso->callback([&] {
    auto F = make_field(field_desc, precision);
    auto E1 = make_ext(F, ext_desc);
    auto E2 = ext2_desc.empty() ? E1 : make_ext(F, ext2_desc);
    int j2 = j2_power == 0 ? j_power : j2_power;
    auto A1 = alg_make(E1, j_power, parse_ext(E1, a_lit));
    auto A2 = alg_make(E2, j2, parse_ext(E2, b_lit));
    bool ans = isomorphic(A1, A2);
    out.emit_text(ans ? "isomorphic" : "not isomorphic");
    out.j = {{"first", A1->name}, {"second", A2->name}, {"isomorphic", ans}};
  });

  Window w;
  auto* enu = cls->add_subcommand("enumerate", "windowed list of pairwise non-isomorphic classes");
  add_field(enu);
  add_ext(enu);
  enu->add_option("--vmin", w.vmin, "least scalar valuation")->capture_default_str();
  enu->add_option("--vmax", w.vmax, "greatest scalar valuation")->capture_default_str();
  enu->add_option("--digits", w.digits, "unit-part digit depth")->capture_default_str();
  enu->callback([&] {
    auto F = make_field(field_desc, precision);
    auto E = make_ext(F, ext_desc);
    auto list = dispatch_enumerate(E, w);
    json arr = json::array();
    for (const auto& c : list) {
      out.emit_text(c.a.str() + "   [" + c.case_tag + "]");
      arr.push_back(canon_to_json(c));
    }
    out.emit_text("total: " + std::to_string(list.size()));
    out.j = {{"extension", E->name}, {"count", list.size()}, {"classes", arr}};
  });

  auto* d4 = cls->add_subcommand("degree4", "degree-4 structure types over a local field");
  add_field(d4);
  d4->callback([&] {
    auto F = make_field(field_desc, precision);
    auto types = degree4_types(F);
    json arr = json::array();
    for (const auto& t : types) {
      out.emit_text(t.label + ": K = " + t.extension + ", E = " + t.intermediate +
                    ", right nucleus " + t.b_descriptor + ", generator sigma^" +
                    std::to_string(t.generator_power));
      arr.push_back({{"label", t.label},
                     {"extension", t.extension},
                     {"intermediate", t.intermediate},
                     {"b_descriptor", t.b_descriptor},
                     {"generator_power", t.generator_power}});
    }
    out.j = {{"types", arr}, {"count", types.size()}};
  });

  // ---- oracle verify | classes ----
  auto* orc = app.add_subcommand("oracle", "brute-force verification over small finite fields");
  int64_t oq = 0;
  int om = 0;
  std::string theorem;
  auto* verify = orc->add_subcommand("verify", "batch-verify a structural fact");
  verify->add_option("name", theorem,
                     "one of sigma_distinct, classify_iso, steele, nuclei, petit_division")
      ->required();
  verify->add_option("--q", oq, "base field size (prime power)")->required();
  verify->add_option("--m", om, "extension degree")->required();
  verify->callback([&] {
    int64_t p;
    int n;
    split_prime_power(oq, p, n);
    auto rep = verify_theorem(theorem, p, n, om);
    out.emit_text("theorem: " + rep.theorem + " (" + rep.params + ")");
    out.emit_text("checked: " + std::to_string(rep.checked) +
                  ", passed: " + std::to_string(rep.passed));
    out.emit_text(std::string("result: ") + (rep.ok() ? "pass" : "FAIL"));
    for (const auto& c : rep.counterexamples) out.emit_text("counterexample: " + c);
    out.j = {{"theorem", rep.theorem},
             {"params", rep.params},
             {"checked", rep.checked},
             {"passed", rep.passed},
             {"counterexamples", rep.counterexamples},
             {"ok", rep.ok()}};
    if (!rep.ok()) exit_code = 1;
  });

  auto* classes = orc->add_subcommand("classes", "isomorphism classes, brute force vs criterion");
  classes->add_option("--q", oq, "base field size (prime power)")->required();
  classes->add_option("--m", om, "extension degree")->required();
  classes->callback([&] {
    int64_t p;
    int n;
    split_prime_power(oq, p, n);
    auto rep = brute_classes(p, n, om);
    out.emit_text("proper elements: " + std::to_string(rep.elements.size()));
    out.emit_text("classes: " + std::to_string(rep.class_count));
    out.emit_text(std::string("brute force and criterion agree: ") +
                  (rep.agreement ? "yes" : "NO"));
    json arr = json::array();
    for (int c = 0; c < rep.class_count; ++c) {
      std::ostringstream line;
      line << "class " << c << ":";
      json cls_arr = json::array();
      for (size_t i = 0; i < rep.elements.size(); ++i)
        if (rep.brute_class[i] == c) {
          line << " " << rep.elements[i].str();
          cls_arr.push_back(rep.elements[i].str());
        }
      out.emit_text(line.str());
      arr.push_back(cls_arr);
    }
    out.j = {{"class_count", rep.class_count}, {"agreement", rep.agreement}, {"classes", arr}};
  });

  // let global flags (--machine, --precision) appear after the subcommand too
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (auto* s : a->get_subcommands(nullptr)) enable_fallthrough(s);
  };
  enable_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  out.flush();
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Err::SyntaxError:
        return 2;
      case Err::UnsupportedCase:
        return 3;
      case Err::InsufficientPrecision:
      case Err::InsufficientInputPrecision:
      case Err::PrecisionExhausted:
      case Err::NormTestInconclusive:
        return 4;
      case Err::TooLarge:
        return 5;
      default:
        return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
