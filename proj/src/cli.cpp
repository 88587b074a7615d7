#include "riopoly/cli.hpp"

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "riopoly/catalog.hpp"
#include "riopoly/errors.hpp"
#include "riopoly/riordan.hpp"

namespace riopoly {

namespace {

using ojson = nlohmann::ordered_json;

struct Usage {
  std::string msg;
};

// Coefficient list with trailing zeros dropped; at least one entry stays.
std::string trimmed_list(const std::vector<Rational>& c) {
  std::size_t last = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) last = i;
  }
  std::string out;
  for (std::size_t i = 0; i <= last; ++i) {
    if (i > 0) out += ',';
    out += to_string(c[i]);
  }
  return out;
}

ojson string_list(const std::vector<Rational>& c) {
  ojson arr = ojson::array();
  for (const Rational& v : c) arr.push_back(to_string(v));
  return arr;
}

std::vector<Rational> trimmed(const std::vector<Rational>& c) {
  std::size_t last = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) last = i;
  }
  return std::vector<Rational>(c.begin(), c.begin() + last + 1);
}

void emit_triangle(const Triangle& t, const std::string& format,
                   std::ostream& os) {
  if (format == "json") {
    os << triangle_to_json(t) << "\n";
  } else if (format == "csv") {
    os << triangle_to_csv(t);
  } else {
    os << triangle_to_text(t);
  }
}

void emit_polys(const std::vector<Polynomial>& ps, const std::string& format,
                const std::string& sym, std::ostream& os) {
  if (format == "json") {
    ojson root;
    ojson arr = ojson::array();
    for (std::size_t n = 0; n < ps.size(); ++n) {
      ojson o;
      o["n"] = n;
      o["coeffs"] = string_list(ps[n].coeffs());
      arr.push_back(std::move(o));
    }
    root["polys"] = std::move(arr);
    os << root.dump() << "\n";
  } else if (format == "csv") {
    for (const Polynomial& p : ps) {
      os << trimmed_list(p.coeffs()) << "\n";
    }
  } else {
    for (std::size_t n = 0; n < ps.size(); ++n) {
      os << sym << "_" << n << " = " << polynomial_to_text(ps[n]) << "\n";
    }
  }
}

void emit_series(const Series& s, const std::string& format,
                 std::ostream& os) {
  if (format == "json") {
    ojson root;
    root["coeffs"] = string_list(s.coeffs());
    os << root.dump() << "\n";
  } else {
    os << to_string(s) << "\n";
  }
}

void emit_spec(const RiordanSpec& s, const std::string& format,
               std::ostream& os) {
  if (format == "json") {
    ojson root;
    root["f"] = string_list(trimmed(s.f().coeffs()));
    root["g"] = string_list(trimmed(s.g().coeffs()));
    os << root.dump() << "\n";
  } else if (format == "csv") {
    os << trimmed_list(s.f().coeffs()) << "\n"
       << trimmed_list(s.g().coeffs()) << "\n";
  } else {
    os << "f = " << trimmed_list(s.f().coeffs()) << "\n"
       << "g = " << trimmed_list(s.g().coeffs()) << "\n";
  }
}

struct SpecFlags {
  std::string f;
  std::string g;
  std::string family;
};

void add_spec_flags(CLI::App* sub, SpecFlags& sf, bool secondary) {
  const std::string suffix = secondary ? "2" : "";
  const std::string which = secondary ? "second " : "";
  sub->add_option("--f" + suffix, sf.f,
                  which + "numerator series: coefficient list or named token");
  sub->add_option("--g" + suffix, sf.g,
                  which + "denominator series: coefficient list or named token");
  sub->add_option("--family" + suffix, sf.family,
                  which + "catalog family name");
}

RiordanSpec resolve_spec(const SpecFlags& sf, std::size_t R,
                         std::optional<Weight>* weight_out) {
  if (!sf.family.empty()) {
    if (!sf.f.empty() || !sf.g.empty()) {
      throw Usage{"give either --family or --f/--g, not both"};
    }
    FamilyEntry e = get_family(sf.family, R);
    if (weight_out != nullptr) *weight_out = std::move(e.weight);
    return e.spec;
  }
  if (sf.f.empty() || sf.g.empty()) {
    throw Usage{"need both --f and --g, or --family"};
  }
  const std::size_t order = R > 0 ? R - 1 : 0;
  return RiordanSpec(parse_series(sf.f, order), parse_series(sf.g, order));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact Riordan matrices, their polynomial sequences, and "
               "weighted (Appell-type) families"};
  app.name("riopoly");
  app.require_subcommand(1);

  SpecFlags s1, s2;
  std::size_t rows = 8;
  std::size_t order = 8;
  std::string format = "text";
  std::string output_path;
  std::string weight_token;
  std::string t0_text;
  std::string input_path;
  std::string suite = "all";
  std::string series_text;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output", output_path, "write output to a file");
  };

  CLI::App* c_triangle =
      app.add_subcommand("triangle", "print the triangle of a spec");
  add_spec_flags(c_triangle, s1, false);
  c_triangle->add_option("--rows", rows, "number of rows");
  add_common(c_triangle);

  CLI::App* c_polys = app.add_subcommand(
      "polys", "print the polynomial sequence of a spec (weighted for "
               "weighted families)");
  add_spec_flags(c_polys, s1, false);
  c_polys->add_option("--rows", rows, "number of polynomials");
  c_polys->add_option("--t0", t0_text,
                      "evaluate at a rational point instead of printing "
                      "coefficients");
  add_common(c_polys);

  CLI::App* c_act =
      app.add_subcommand("act", "apply the matrix action of a spec to a series");
  add_spec_flags(c_act, s1, false);
  c_act->add_option("series", series_text, "series argument")->required();
  c_act->add_option("--order", order, "truncation order");
  add_common(c_act);

  CLI::App* c_product =
      app.add_subcommand("product", "group product of two specs");
  add_spec_flags(c_product, s1, false);
  add_spec_flags(c_product, s2, true);
  c_product->add_option("--rows", rows, "truncation depth");
  add_common(c_product);

  CLI::App* c_inverse = app.add_subcommand("inverse", "group inverse of a spec");
  add_spec_flags(c_inverse, s1, false);
  c_inverse->add_option("--rows", rows, "truncation depth");
  add_common(c_inverse);

  CLI::App* c_asequence = app.add_subcommand(
      "asequence", "A-sequence of a denominator series g");
  c_asequence->add_option("--g", s1.g, "denominator series")->required();
  c_asequence->add_option("--order", order, "truncation order");
  add_common(c_asequence);

  CLI::App* c_umbral = app.add_subcommand(
      "umbral", "umbral composition of the sequences of two specs");
  add_spec_flags(c_umbral, s1, false);
  add_spec_flags(c_umbral, s2, true);
  c_umbral->add_option("--rows", rows, "number of polynomials");
  add_common(c_umbral);

  CLI::App* c_appell = app.add_subcommand(
      "appell", "weighted polynomial sequence of a spec under a weight");
  add_spec_flags(c_appell, s1, false);
  c_appell->add_option("--rows", rows, "number of polynomials");
  c_appell->add_option("--weight", weight_token,
                       "weight token (exp, geometric, inv_square, "
                       "a_minus_log:<a>, custom:<list>)");
  add_common(c_appell);

  CLI::App* c_recover = app.add_subcommand(
      "recover", "recover the generating spec from a triangle JSON file");
  c_recover->add_option("--input", input_path, "triangle JSON file")
      ->required();
  add_common(c_recover);

  CLI::App* c_verify = app.add_subcommand(
      "verify", "run golden-data and identity verification suites");
  c_verify->add_option("--suite", suite, "which suite to run")
      ->check(CLI::IsMember({"all", "golden", "identities"}));
  add_common(c_verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  std::ostringstream buf;
  int code = 0;
  try {
    if (app.got_subcommand(c_triangle)) {
      emit_triangle(build_triangle(resolve_spec(s1, rows, nullptr), rows),
                    format, buf);
    } else if (app.got_subcommand(c_polys)) {
      std::optional<Weight> w;
      const RiordanSpec sp = resolve_spec(s1, rows, &w);
      const std::vector<Polynomial> ps =
          w ? weighted_sequence(sp, *w, rows).polys
            : sequence_from_spec(sp, rows).polys;
      if (!t0_text.empty()) {
        const Rational t0 = parse_rational(t0_text);
        std::vector<Rational> values;
        values.reserve(ps.size());
        for (const Polynomial& p : ps) values.push_back(evaluate(p, t0));
        if (format == "json") {
          ojson root;
          root["t0"] = to_string(t0);
          root["values"] = string_list(values);
          buf << root.dump() << "\n";
        } else if (format == "csv") {
          buf << trimmed_list(values) << "\n";
        } else {
          for (std::size_t n = 0; n < values.size(); ++n) {
            buf << "p_" << n << "(" << to_string(t0)
                << ") = " << to_string(values[n]) << "\n";
          }
        }
      } else {
        emit_polys(ps, format, "p", buf);
      }
    } else if (app.got_subcommand(c_act)) {
      const RiordanSpec sp = resolve_spec(s1, order + 1, nullptr);
      emit_series(act(sp, parse_series(series_text, order)), format, buf);
    } else if (app.got_subcommand(c_product)) {
      const RiordanSpec a = resolve_spec(s1, rows, nullptr);
      const RiordanSpec b = resolve_spec(s2, rows, nullptr);
      emit_spec(product(a, b), format, buf);
    } else if (app.got_subcommand(c_inverse)) {
      emit_spec(inverse(resolve_spec(s1, rows, nullptr), rows), format, buf);
    } else if (app.got_subcommand(c_asequence)) {
      const Series g = parse_series(s1.g, order);
      emit_series(a_sequence(g, order), format, buf);
    } else if (app.got_subcommand(c_umbral)) {
      const PolySeq p = sequence_from_spec(resolve_spec(s1, rows, nullptr), rows);
      const PolySeq q = sequence_from_spec(resolve_spec(s2, rows, nullptr), rows);
      emit_polys(umbral_compose(p, q).polys, format, "q", buf);
    } else if (app.got_subcommand(c_appell)) {
      std::optional<Weight> w;
      const RiordanSpec sp = resolve_spec(s1, rows, &w);
      if (!weight_token.empty()) {
        w = parse_weight(weight_token, rows > 0 ? rows - 1 : 0);
      }
      if (!w) throw Usage{"appell needs --weight or a weighted --family"};
      emit_polys(weighted_sequence(sp, *w, rows).polys, format, "s", buf);
    } else if (app.got_subcommand(c_recover)) {
      std::ifstream in(input_path);
      if (!in) throw Usage{"cannot open '" + input_path + "'"};
      std::stringstream ss;
      ss << in.rdbuf();
      emit_spec(recover_spec(triangle_from_json(ss.str())), format, buf);
    } else if (app.got_subcommand(c_verify)) {
      std::size_t total = 0;
      std::size_t passed = 0;
      const auto line = [&](bool ok, const std::string& label,
                            const std::string& detail) {
        ++total;
        if (ok) ++passed;
        buf << (ok ? "ok   " : "FAIL ") << label;
        if (!ok) buf << ": " << detail;
        buf << "\n";
      };
      if (suite != "identities") {
        for (const std::string& name : family_names()) {
          const VerifyReport r = verify_family(name, 13);
          line(r.ok, "golden:" + name, r.detail);
        }
      }
      if (suite != "golden") {
        for (const std::string& name : check_names()) {
          const CheckResult r = run_check(name);
          line(r.ok, "check:" + name, r.detail);
        }
      }
      buf << passed << "/" << total << " checks passed\n";
      if (passed != total) {
        err << "verification failed\n";
        code = 2;
      }
    }
  } catch (const Usage& u) {
    err << "usage error: " << u.msg << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  if (!output_path.empty()) {
    std::ofstream f(output_path, std::ios::binary);
    if (!f) {
      err << "usage error: cannot write '" << output_path << "'\n";
      return 1;
    }
    f << buf.str();
  } else {
    out << buf.str();
  }
  return code;
}

}  // namespace riopoly
