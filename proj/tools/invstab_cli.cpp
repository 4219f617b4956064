// invstab: command-line front end.
//
// Exit status: 0 on success, 1 on domain errors (a point on a wall, a path
// through a puncture, a failed verification, ...), 2 on usage errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "invstab/chambers.hpp"
#include "invstab/kronecker.hpp"
#include "invstab/serialize.hpp"
#include "invstab/verify.hpp"

using namespace invstab;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Defaults {
  int n_max = 3;
  FieldTag field = FieldTag::fp(5);
  BruteforceBudget budget;
};

Defaults load_config(const std::string& path) {
  Defaults d;
  if (path.empty()) return d;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception& e) {
    throw UsageError("config file is not valid JSON: " + std::string(e.what()));
  }
  if (j.contains("n_max")) d.n_max = j["n_max"].get<int>();
  if (j.contains("field")) d.field = FieldTag::parse(j["field"].get<std::string>());
  if (j.contains("budget")) {
    const Json& b = j["budget"];
    if (b.contains("max_q")) d.budget.max_q = b["max_q"].get<std::size_t>();
    if (b.contains("max_field")) d.budget.max_field = b["max_field"].get<std::int64_t>();
  }
  return d;
}

TiltWord canonical_word(const ExactComplex& x) {
  const long n = locate_strip(x).get_si();
  std::vector<Generator> letters(static_cast<std::size_t>(n < 0 ? -n : n), n < 0 ? Generator::T_inv : Generator::T);
  return TiltWord::reduced(letters);
}

ChamberPoint point_from(const std::string& x_text, const std::string& word_text) {
  const ExactComplex x = parse_complex(x_text);
  const TiltWord w = word_text.empty() ? canonical_word(x) : TiltWord::parse(word_text);
  return ChamberPoint{w, x};
}

std::vector<ExactComplex> parse_path(const std::string& text) {
  std::vector<ExactComplex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_complex(item));
  }
  if (out.empty()) throw std::invalid_argument("path needs at least one waypoint");
  return out;
}

Json ext_json(const ExtMatrix& e) {
  Json rows = Json::array();
  for (const auto& row : e) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x ? Json(*x) : Json(nullptr));
    rows.push_back(r);
  }
  return rows;
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant stability conditions on local P1 x P1: chambers, catalogs, tilts, HN filtrations"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with defaults: n_max, field, budget {max_q, max_field}");

  std::string x_text, word_text, path_text, rep_path, z0_text, z1_text, figure, out_path, dir_text = "left";
  int n_max = -1;
  int simple_slot = -1, double_slot = -1;

  auto* chamber = app.add_subcommand("chamber", "Region of x and the heart of its sheet");
  chamber->add_option("--x", x_text, "normalized charge x = Z(gamma_0), e.g. \"1/4+1/4*i\"")->required();
  chamber->add_option("--word", word_text, "sheet word, e.g. \"T,Tpsi^-1\" (default: T^n with n from the strip)");

  auto* stable = app.add_subcommand("stable", "Stable objects at x, one JSON line each");
  stable->add_option("--x", x_text, "normalized charge x")->required();
  stable->add_option("--word", word_text, "sheet word");
  stable->add_option("--nmax", n_max, "truncation index");

  auto* hn = app.add_subcommand("hn", "Harder-Narasimhan factors of a Kronecker representation");
  hn->add_option("--rep", rep_path, "JSON file {p, q, field, A, B} (- for stdin)")->required();
  hn->add_option("--z0", z0_text, "Z(C0)")->required();
  hn->add_option("--z1", z1_text, "Z(C1)")->required();

  auto* tilt = app.add_subcommand("tilt", "Heart of a word, optionally followed by a simple or double tilt");
  tilt->add_option("--word", word_text, "word in T, T^-1, Tpsi, Tpsi^-1 (empty: standard heart)");
  tilt->add_option("--simple", simple_slot, "slot of a simple tilt")->check(CLI::Range(0, 3));
  tilt->add_option("--double", double_slot, "slot i of a double tilt at {i, i+2}")->check(CLI::Range(0, 3));
  tilt->add_option("--dir", dir_text, "left or right")->check(CLI::IsMember({"left", "right"}));

  auto* lift = app.add_subcommand("lift", "Lift a polygonal path through the covering");
  lift->add_option("--start", x_text, "starting x")->required();
  lift->add_option("--word", word_text, "starting sheet (default: T^n from the strip)");
  lift->add_option("--path", path_text, "waypoints separated by ';'")->required();

  auto* strip = app.add_subcommand("strip", "Strip index n with Im x + n/2 in [0, 1/2)");
  strip->add_option("--x", x_text, "normalized charge x")->required();

  auto* render = app.add_subcommand("render", "Write an SVG figure");
  render->add_option("--figure", figure, "sstab or hreg")->required()->check(CLI::IsMember({"sstab", "hreg"}));
  render->add_option("--out", out_path, "output file")->required();
  render->add_option("--x", x_text, "point for the sstab figure (default 1/4+1/8*i)");
  render->add_option("--word", word_text, "sheet word for the sstab figure");
  render->add_option("--nmax", n_max, "truncation index");

  auto* verify = app.add_subcommand("verify", "Replay the identity suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Defaults d = load_config(config_path);
    const int nmax = n_max >= 0 ? n_max : d.n_max;

    if (chamber->parsed()) {
      const ChamberPoint p = point_from(x_text, word_text);
      const Region r = p.region();
      Json out{{"x", p.x.str()}, {"word", p.word.str()}, {"region", r.str()},
               {"strip", to_string(locate_strip(p.x))}};
      const TiltWord empty;
      out["heart_is_standard"] = p.word == empty;
      const Heart h = heart_of_word(p.word);
      out["heart"] = to_json(h);
      emit(out);
      return r.in_chamber() ? 0 : 1;
    }
    if (stable->parsed()) {
      for (const auto& e : stable_catalog(point_from(x_text, word_text), nmax)) emit(to_json(e));
      return 0;
    }
    if (hn->parsed()) {
      Json j;
      try {
        if (rep_path == "-") {
          j = Json::parse(std::cin);
        } else {
          std::ifstream in(rep_path);
          if (!in) throw UsageError("cannot open representation file '" + rep_path + "'");
          j = Json::parse(in);
        }
      } catch (const Json::exception& e) {
        throw UsageError("representation file is not valid JSON: " + std::string(e.what()));
      }
      const KroneckerRep M = rep_from_json(j);
      const StabilityFunctionK2 Z{parse_complex(z0_text), parse_complex(z1_text)};
      for (const HNFactor& f : hn_filtration(M, Z)) {
        Json line = to_json(f);
        if (f.rep.q <= d.budget.max_q && d.field.prime <= d.budget.max_field) {
          const auto v = semistable_bruteforce(reduce_mod_p(f.rep, d.field.prime), Z, d.budget);
          line["oracle_" + d.field.str() + "_semistable"] = v.semistable;
        }
        emit(line);
      }
      return 0;
    }
    if (tilt->parsed()) {
      Heart h = heart_of_word(TiltWord::parse(word_text));
      if (simple_slot >= 0 && double_slot >= 0) throw UsageError("choose at most one of --simple and --double");
      const TiltDirection dir = parse_direction(dir_text);
      if (simple_slot >= 0) h = simple_tilt(h, simple_slot, dir);
      if (double_slot >= 0) h = double_tilt(h, double_slot, dir);
      emit(Json{{"word", TiltWord::parse(word_text).str()}, {"simples", to_json(h)}, {"ext", ext_json(h.ext)}});
      return 0;
    }
    if (lift->parsed()) {
      const LiftResult r = lift_path(point_from(x_text, word_text), parse_path(path_text));
      for (const Crossing& c : r.crossings) emit(to_json(c));
      emit(Json{{"end", r.end.x.str()}, {"word", r.end.word.str()}, {"region", r.end.region().str()},
                {"monodromy_trivial", r.end.word.empty()}});
      return 0;
    }
    if (strip->parsed()) {
      const ExactComplex x = parse_complex(x_text);
      const Integer n = locate_strip(x);
      emit(Json{{"x", x.str()}, {"n", to_string(n)}, {"base_x", to_base_frame(x, n.get_si()).str()}});
      return 0;
    }
    if (render->parsed()) {
      std::string svg;
      if (figure == "hreg") {
        svg = render_arrangement(n_max >= 0 ? n_max : 2);
      } else {
        svg = render_charge_diagram(point_from(x_text.empty() ? "1/4+1/8*i" : x_text, word_text), nmax);
      }
      std::ofstream out(out_path);
      if (!out) throw UsageError("cannot write '" + out_path + "'");
      out << svg;
      emit(Json{{"figure", figure}, {"out", out_path}, {"bytes", svg.size()}});
      return 0;
    }
    if (verify->parsed()) {
      bool all = true;
      for (const CheckResult& c : run_identity_suite()) {
        std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name;
        if (!c.pass) std::cout << "  (" << c.detail << ")";
        std::cout << '\n';
        all = all && c.pass;
      }
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
