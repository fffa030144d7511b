// pscver: command-line surface of the verification library. Every subcommand
// prints a human-readable report by default, a structured JSON document with
// --json, and exits 0 on success, 1 when a verification suite finds a failing
// claim, 2 on bad input.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "psc/arith.hpp"
#include "psc/charnum.hpp"
#include "psc/checks.hpp"
#include "psc/curvature.hpp"
#include "psc/homalg.hpp"
#include "psc/sweeps.hpp"

namespace {

using ojson = nlohmann::ordered_json;
using psc::arith::Int;
using psc::arith::Rat;
using psc::curvature::Field;

struct Options {
  bool json = false;
  std::string output;
  std::uint64_t seed = 12345;
  bool timestamps = false;
};

struct Report {
  std::string command;
  ojson inputs = ojson::object();
  ojson result = ojson::object();
  std::vector<std::string> refs;
  bool ok = true;
  std::string human;
  bool csv = false;  // human payload is CSV; keep it free of extra lines
};

// Union of the flags any one subcommand binds; each leaf owns an instance.
struct Args {
  std::string field, s, t, u, delta, manifold, matrix, ranks, torsion,
      degrees, coeff_field;
  long n = 0, m = 0, k = 0, grid = 64, max_degree = 0;
  int samples = 256;
};

std::string now_iso_utc() {
  std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Rat parse_rat(const std::string& text) {
  try {
    Rat q(text, 10);
    if (q.get_den() == 0)
      throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + text +
                                "' (use p/q or an integer)");
  }
}

Field parse_field(const std::string& text) {
  if (text == "R" || text == "r") return Field::R;
  if (text == "C" || text == "c") return Field::C;
  if (text == "H" || text == "h") return Field::H;
  throw std::invalid_argument("field must be R, C or H, got '" + text + "'");
}

const char* field_name(Field k) {
  switch (k) {
    case Field::R: return "R";
    case Field::C: return "C";
    default: return "H";
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

Int parse_int(const std::string& text) {
  try {
    return Int(text, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
}

long parse_long(const std::string& text) {
  Int v = parse_int(text);
  if (!v.fits_slong_p())
    throw std::invalid_argument("integer out of range: '" + text + "'");
  return v.get_si();
}

psc::homalg::IntMatrix parse_matrix(const std::string& text) {
  auto row_texts = split(text, ';');
  if (row_texts.empty() || row_texts[0].empty())
    throw std::invalid_argument("empty matrix");
  auto first = split(row_texts[0], ',');
  psc::homalg::IntMatrix m(static_cast<int>(row_texts.size()),
                           static_cast<int>(first.size()));
  for (int r = 0; r < m.rows; ++r) {
    auto entries = split(row_texts[static_cast<std::size_t>(r)], ',');
    if (static_cast<int>(entries.size()) != m.cols)
      throw std::invalid_argument("ragged matrix rows");
    for (int c = 0; c < m.cols; ++c)
      m.at(r, c) = parse_int(entries[static_cast<std::size_t>(c)]);
  }
  return m;
}

std::string matrix_str(const psc::homalg::IntMatrix& m) {
  std::string out;
  for (int r = 0; r < m.rows; ++r) {
    if (r) out += ';';
    for (int c = 0; c < m.cols; ++c) {
      if (c) out += ',';
      out += m.at(r, c).get_str();
    }
  }
  return out;
}

ojson matrix_json(const psc::homalg::IntMatrix& m) {
  ojson rows = ojson::array();
  for (int r = 0; r < m.rows; ++r) {
    ojson row = ojson::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string group_str(const psc::homalg::AbelianGroupInvariants& g) {
  std::string out;
  auto join = [&out](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (g.free_rank == 1) join("Z");
  if (g.free_rank > 1) join("Z^" + std::to_string(g.free_rank));
  for (const auto& t : g.torsion) join("Z/" + t.get_str());
  return out.empty() ? "0" : out;
}

ojson group_json(const psc::homalg::AbelianGroupInvariants& g) {
  ojson torsion = ojson::array();
  for (const auto& t : g.torsion) torsion.push_back(t.get_str());
  return ojson{{"free_rank", g.free_rank}, {"torsion", torsion}};
}

// Homology input: --ranks "1,0,0,0,0,1" gives the free ranks in degrees
// 0..top, --torsion "2:2;4:3,3" attaches torsion orders to degrees.
psc::homalg::IntegralHomology parse_homology(const std::string& ranks,
                                             const std::string& torsion) {
  psc::homalg::IntegralHomology h;
  for (const auto& part : split(ranks, ',')) {
    long r = parse_long(part);
    if (r < 0) throw std::invalid_argument("negative free rank");
    h.groups.push_back({static_cast<int>(r), {}});
  }
  if (!torsion.empty())
    for (const auto& entry : split(torsion, ';')) {
      auto pos = entry.find(':');
      if (pos == std::string::npos)
        throw std::invalid_argument("torsion entries look like 'deg:t1,t2'");
      long deg = parse_long(entry.substr(0, pos));
      if (deg < 0 || deg > h.top())
        throw std::invalid_argument("torsion degree out of range");
      for (const auto& t : split(entry.substr(pos + 1), ',')) {
        Int order = parse_int(t);
        if (order < 2) throw std::invalid_argument("torsion orders are >= 2");
        h.groups[static_cast<std::size_t>(deg)].torsion.push_back(order);
      }
    }
  return h;
}

psc::homalg::HomologyField parse_coeff_field(const std::string& text) {
  if (text == "Q" || text == "q") return psc::homalg::HomologyField::Q();
  if ((text.size() >= 2 && (text[0] == 'F' || text[0] == 'f'))) {
    long p = parse_long(text.substr(1));
    if (!psc::arith::is_prime(p))
      throw std::invalid_argument("coefficient field F" + std::to_string(p) +
                                  ": p must be prime");
    return psc::homalg::HomologyField::Fp(p);
  }
  throw std::invalid_argument("coefficient field must be Q or Fp, got '" +
                              text + "'");
}

std::string fp12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string render(const Report& rep, const Options& opt) {
  if (opt.json) {
    ojson j;
    j["command"] = rep.command;
    j["inputs"] = rep.inputs;
    j["result"] = rep.result;
    j["paper_refs"] = rep.refs;
    j["status"] = rep.ok ? "ok" : "fail";
    if (opt.timestamps) j["timestamp"] = now_iso_utc();
    return j.dump(2) + "\n";
  }
  std::string out = rep.human;
  if (!out.empty() && out.back() != '\n') out += '\n';
  if (opt.timestamps && !rep.csv) out += "generated at " + now_iso_utc() + "\n";
  return out;
}

int emit(const Report& rep, const Options& opt) {
  std::string text = render(rep, opt);
  if (!opt.output.empty()) {
    std::ofstream f(opt.output);
    if (!f) {
      std::cerr << "error: cannot open '" << opt.output << "' for writing\n";
      return 2;
    }
    f << text;
    if (!f.good()) {
      std::cerr << "error: failed writing '" << opt.output << "'\n";
      return 2;
    }
  } else {
    std::cout << text;
  }
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact verification toolkit: curvature formulas, characteristic "
      "numbers, integer homology and the combined claim checker"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "structured JSON output");
  app.add_option("--output", opt.output, "write the report to this file");
  app.add_option("--seed", opt.seed,
                 "seed for the randomized verification batches")
      ->capture_default_str();
  app.add_flag("--timestamps", opt.timestamps,
               "append a wall-clock timestamp (off keeps output reproducible)");

  std::function<Report()> action;

  auto leaf = [&action](CLI::App* sub, std::shared_ptr<Args> a,
                        std::function<Report(const Args&)> fn) {
    sub->fallthrough();
    sub->callback([&action, a, fn = std::move(fn)] {
      action = [a, fn] { return fn(*a); };
    });
  };

  // ---- curvature ----------------------------------------------------------
  auto* curv = app.add_subcommand(
      "curvature", "scalar curvature formulas and positivity certificates");
  curv->fallthrough();
  curv->require_subcommand(1);

  {
    auto a = std::make_shared<Args>();
    auto* sc = curv->add_subcommand(
        "berger", "scalar curvature of the two-parameter sphere metric");
    sc->add_option("--field", a->field, "base field: R, C or H")->required();
    sc->add_option("--n", a->n, "projective dimension of the base")
        ->required();
    sc->add_option("--s", a->s, "base scale (rational p/q)")->required();
    sc->add_option("--t", a->t, "fiber scale (rational p/q)")->required();
    leaf(sc, a, [](const Args& a) {
      Field k = parse_field(a.field);
      Rat s = parse_rat(a.s), t = parse_rat(a.t);
      Rat scal = psc::curvature::scal_berger(k, a.n, s, t);
      Report rep;
      rep.command = "curvature berger";
      rep.inputs = {{"field", field_name(k)},
                    {"n", a.n},
                    {"s", s.get_str()},
                    {"t", t.get_str()}};
      rep.result = {{"scal", scal.get_str()}};
      rep.refs = {"two-parameter sphere metrics"};
      rep.human = "scal = " + scal.get_str();
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = curv->add_subcommand(
        "double", "scalar curvature of the two-base connection metric");
    sc->add_option("--field", a->field, "base field: R, C or H")->required();
    sc->add_option("--n", a->n, "dimension of the first base factor")
        ->required();
    sc->add_option("--m", a->m, "dimension of the second base factor")
        ->required();
    sc->add_option("--s", a->s, "first base scale (rational)")->required();
    sc->add_option("--u", a->u, "second base scale (rational)")->required();
    sc->add_option("--t", a->t, "fiber scale (rational)")->required();
    leaf(sc, a, [](const Args& a) {
      Field k = parse_field(a.field);
      Rat s = parse_rat(a.s), u = parse_rat(a.u), t = parse_rat(a.t);
      Rat scal = psc::curvature::scal_double_connection(k, a.n, a.m, s, u, t);
      Report rep;
      rep.command = "curvature double";
      rep.inputs = {{"field", field_name(k)}, {"n", a.n}, {"m", a.m},
                    {"s", s.get_str()},       {"u", u.get_str()},
                    {"t", t.get_str()}};
      rep.result = {{"scal", scal.get_str()}};
      rep.refs = {"connection metric scalar curvature"};
      rep.human = "scal = " + scal.get_str();
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = curv->add_subcommand(
        "constants", "curvature constants of a projective space");
    sc->add_option("--field", a->field, "base field: R, C or H")->required();
    sc->add_option("--n", a->n, "projective dimension")->required();
    leaf(sc, a, [](const Args& a) {
      Field k = parse_field(a.field);
      auto cc = psc::curvature::constants(k, a.n);
      Report rep;
      rep.command = "curvature constants";
      rep.inputs = {{"field", field_name(k)}, {"n", a.n}};
      rep.result = {{"b", cc.b.get_str()},
                    {"c_fiber", cc.c_fiber.get_str()},
                    {"a", cc.a.get_str()},
                    {"sphere_dim", psc::curvature::field_dim(k) * a.n +
                                       psc::curvature::field_dim(k) - 1}};
      rep.refs = {"projective space curvature constants"};
      rep.human = "b = " + cc.b.get_str() + "\nc_fiber = " +
                  cc.c_fiber.get_str() + "\na = " + cc.a.get_str();
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = curv->add_subcommand(
        "region", "positivity region of the double connection metric");
    sc->add_option("--field", a->field, "base field: R, C or H")->required();
    sc->add_option("--n", a->n, "dimension of the first base factor")
        ->required();
    sc->add_option("--m", a->m, "dimension of the second base factor")
        ->required();
    leaf(sc, a, [](const Args& a) {
      Field k = parse_field(a.field);
      auto p = psc::curvature::region_problem_from(k, a.n, a.m);
      auto r = psc::curvature::solve_region(p);
      const char* status =
          r.status == psc::curvature::RegionStatus::Empty ? "empty"
          : r.status == psc::curvature::RegionStatus::NonEmpty
              ? "non_empty"
              : "all_of_quadrant";
      Report rep;
      rep.command = "curvature region";
      rep.inputs = {{"field", field_name(k)}, {"n", a.n}, {"m", a.m}};
      rep.result = {{"status", status}, {"convex", r.convex}};
      if (r.witness)
        rep.result["witness"] = {{"x", r.witness->first.get_str()},
                                 {"y", r.witness->second.get_str()}};
      else
        rep.result["witness"] = nullptr;
      rep.refs = {"positivity region trichotomy"};
      rep.human = std::string("status = ") + status;
      if (r.witness)
        rep.human += "\nwitness: x = " + r.witness->first.get_str() +
                     ", y = " + r.witness->second.get_str();
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = curv->add_subcommand(
        "dimension", "dimension of the space of invariant metrics");
    sc->add_option("--field", a->field, "base field: R, C or H")->required();
    sc->add_option("--n", a->n, "dimension of the first base factor")
        ->required();
    sc->add_option("--m", a->m, "dimension of the second base factor")
        ->required();
    leaf(sc, a, [](const Args& a) {
      Field k = parse_field(a.field);
      int dim = psc::curvature::invariant_metric_dimension(k, a.n, a.m);
      Report rep;
      rep.command = "curvature dimension";
      rep.inputs = {{"field", field_name(k)}, {"n", a.n}, {"m", a.m}};
      rep.result = {{"dimension", dim}};
      rep.refs = {"invariant metric moduli dimensions"};
      rep.human = "dimension = " + std::to_string(dim);
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = curv->add_subcommand(
        "torpedo", "torpedo profile and its scalar curvature along the axis");
    sc->add_option("--k", a->k, "fiber dimension (>= 2)")->required();
    sc->add_option("--delta", a->delta, "cylinder radius (rational)")
        ->required();
    sc->add_option("--samples", a->samples, "profile sample count")
        ->capture_default_str();
    leaf(sc, a, [](const Args& a) {
      Rat delta = parse_rat(a.delta);
      auto prof = psc::curvature::make_torpedo(a.k, delta, a.samples);
      auto scal = psc::curvature::rotsym_scal(prof);
      Report rep;
      rep.command = "curvature torpedo";
      rep.inputs = {{"k", a.k},
                    {"delta", delta.get_str()},
                    {"samples", a.samples}};
      rep.result = {{"cap_end", prof.cap_end},
                    {"flat_start", prof.flat_start},
                    {"length", prof.length},
                    {"min_scal", scal.min_scal},
                    {"tip_scal", scal.samples.front().second}};
      rep.refs = {"torpedo profiles"};
      rep.human = "cap_end = " + fp12(prof.cap_end) +
                  "\nflat_start = " + fp12(prof.flat_start) +
                  "\nlength = " + fp12(prof.length) +
                  "\nmin_scal = " + fp12(scal.min_scal);
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = curv->add_subcommand(
        "wu-bounds", "curvature bounds of the disc construction");
    leaf(sc, a, [](const Args&) {
      auto [disc, family] = psc::curvature::wu_curvature_bounds();
      Report rep;
      rep.command = "curvature wu-bounds";
      rep.result = {{"disc", disc.get_str()}, {"family", family.get_str()}};
      rep.refs = {"disc and family curvature bounds"};
      rep.human = "disc bound = " + disc.get_str() +
                  "\nfamily bound = " + family.get_str();
      return rep;
    });
  }

  // ---- charnum -------------------------------------------------------------
  auto* charn = app.add_subcommand(
      "charnum", "characteristic classes and cobordism invariants");
  charn->fallthrough();
  charn->require_subcommand(1);

  {
    auto a = std::make_shared<Args>();
    auto* sc = charn->add_subcommand(
        "s-number", "s-number of a manifold descriptor");
    sc->add_option("--manifold", a->manifold,
                   "descriptor, e.g. cp4, h_2_3, hp2, cp2*cp2")
        ->required();
    sc->add_option("--k", a->k, "power sum index (dimension 4k)")->required();
    leaf(sc, a, [](const Args& a) {
      auto d = psc::charnum::ManifoldDescriptor::parse(a.manifold);
      Int v = psc::charnum::s_number(d, static_cast<int>(a.k));
      Report rep;
      rep.command = "charnum s-number";
      rep.inputs = {{"manifold", d.str()}, {"k", a.k}};
      rep.result = {{"value", v.get_str()}};
      rep.refs = {"s-numbers through the ring engine"};
      rep.human = "s_" + std::to_string(a.k) + "(" + d.str() +
                  ") = " + v.get_str();
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = charn->add_subcommand(
        "chern", "Chern classes of the tangent bundle");
    sc->add_option("--manifold", a->manifold, "complex manifold descriptor")
        ->required();
    leaf(sc, a, [](const Args& a) {
      auto d = psc::charnum::ManifoldDescriptor::parse(a.manifold);
      auto c = psc::charnum::chern_total(d);
      Report rep;
      rep.command = "charnum chern";
      rep.inputs = {{"manifold", d.str()}};
      ojson classes = ojson::array();
      std::string human;
      for (std::size_t q = 0; q < c.classes.size(); ++q) {
        classes.push_back(c.classes[q].str());
        human += "c_" + std::to_string(q) + " = " + c.classes[q].str() + "\n";
      }
      rep.result = {{"classes", classes}};
      rep.refs = {"tangent Chern classes"};
      rep.human = human;
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = charn->add_subcommand(
        "pontryagin", "Pontryagin classes of the tangent bundle");
    sc->add_option("--manifold", a->manifold, "manifold descriptor")
        ->required();
    leaf(sc, a, [](const Args& a) {
      auto d = psc::charnum::ManifoldDescriptor::parse(a.manifold);
      auto p = psc::charnum::pontryagin_total(d);
      Report rep;
      rep.command = "charnum pontryagin";
      rep.inputs = {{"manifold", d.str()}};
      ojson classes = ojson::array();
      std::string human;
      for (std::size_t q = 0; q < p.classes.size(); ++q) {
        classes.push_back(p.classes[q].str());
        human += "p_" + std::to_string(q) + " = " + p.classes[q].str() + "\n";
      }
      rep.result = {{"classes", classes}};
      rep.refs = {"tangent Pontryagin classes"};
      rep.human = human;
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = charn->add_subcommand(
        "signature", "signature through the L-genus (dimension 0, 4 or 8)");
    sc->add_option("--manifold", a->manifold, "manifold descriptor")
        ->required();
    leaf(sc, a, [](const Args& a) {
      auto d = psc::charnum::ManifoldDescriptor::parse(a.manifold);
      Int v = psc::charnum::signature(d);
      Report rep;
      rep.command = "charnum signature";
      rep.inputs = {{"manifold", d.str()}};
      rep.result = {{"value", v.get_str()}};
      rep.refs = {"signature from the L-genus"};
      rep.human = "signature = " + v.get_str();
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = charn->add_subcommand(
        "generators",
        "combination of standard manifolds reaching the minimal s-number");
    sc->add_option("--k", a->k, "dimension 4k, k >= 2")->required();
    leaf(sc, a, [](const Args& a) {
      auto cert = psc::charnum::generator_search(static_cast<int>(a.k));
      Report rep;
      rep.command = "charnum generators";
      rep.inputs = {{"k", a.k}};
      ojson combo = ojson::array();
      std::string human = "target = " + cert.target.get_str() + "\n";
      for (const auto& [coeff, d] : cert.combination) {
        combo.push_back(
            {{"coeff", coeff.get_str()}, {"manifold", d.str()}});
        human += "  " + coeff.get_str() + " * " + d.str() + "\n";
      }
      rep.result = {{"target", cert.target.get_str()},
                    {"combination", combo}};
      rep.refs = {"generator certificates"};
      rep.human = human;
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = charn->add_subcommand(
        "omega8", "rank-two lattice of dimension-eight invariants");
    leaf(sc, a, [](const Args&) {
      auto rep8 = psc::charnum::omega8_report();
      Report rep;
      rep.command = "charnum omega8";
      rep.result = {{"a", rep8.a.get_str()},
                    {"b", rep8.b.get_str()},
                    {"index", rep8.index.get_str()},
                    {"sig_hp2", rep8.sig_hp2.get_str()},
                    {"s2_hp2", rep8.s_hp2.get_str()}};
      rep.refs = {"rank-two lattice in dimension eight"};
      rep.human = "[hp2] = " + rep8.a.get_str() + "*[cp4] + " +
                  rep8.b.get_str() + "*[cp2*cp2]\nindex = " +
                  rep8.index.get_str() + "\nsignature(hp2) = " +
                  rep8.sig_hp2.get_str() + "\ns_2(hp2) = " +
                  rep8.s_hp2.get_str();
      return rep;
    });
  }

  // ---- arith ---------------------------------------------------------------
  auto* arith = app.add_subcommand("arith", "binomial gcd toolkit");
  arith->fallthrough();
  arith->require_subcommand(1);

  {
    auto a = std::make_shared<Args>();
    auto* sc = arith->add_subcommand(
        "gcd-binom", "gcd of the interior binomials of a Pascal row");
    sc->add_option("--n", a->n, "row index, n >= 2")->required();
    leaf(sc, a, [](const Args& a) {
      Int g = psc::arith::gcd_row_binomials(a.n);
      Report rep;
      rep.command = "arith gcd-binom";
      rep.inputs = {{"n", a.n}};
      rep.result = {{"value", g.get_str()}};
      rep.refs = {"binomial row gcd rule"};
      rep.human = "gcd = " + g.get_str();
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = arith->add_subcommand(
        "d-odd", "restricted odd-row binomial gcd d(2k+1)");
    sc->add_option("--k", a->k, "half-index, k >= 3")->required();
    leaf(sc, a, [](const Args& a) {
      Int g = psc::arith::restricted_gcd_d(a.k);
      Report rep;
      rep.command = "arith d-odd";
      rep.inputs = {{"k", a.k}};
      rep.result = {{"value", g.get_str()}};
      rep.refs = {"restricted binomial gcd"};
      rep.human = "d = " + g.get_str();
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = arith->add_subcommand(
        "prime-power", "classify an integer as p^s or not a prime power");
    sc->add_option("--n", a->n, "integer, n >= 2")->required();
    leaf(sc, a, [](const Args& a) {
      auto pp = psc::arith::prime_power_classify(a.n);
      Report rep;
      rep.command = "arith prime-power";
      rep.inputs = {{"n", a.n}};
      if (pp) {
        rep.result = {{"is_prime_power", true},
                      {"p", pp->p.get_str()},
                      {"exponent", pp->exponent}};
        rep.human = std::to_string(a.n) + " = " + pp->p.get_str() + "^" +
                    std::to_string(pp->exponent);
      } else {
        rep.result = {{"is_prime_power", false}};
        rep.human = std::to_string(a.n) + " is not a prime power";
      }
      rep.refs = {"prime power classification"};
      return rep;
    });
  }

  // ---- homalg ---------------------------------------------------------------
  auto* hom = app.add_subcommand(
      "homalg", "integer matrices, homology and graded series");
  hom->fallthrough();
  hom->require_subcommand(1);

  {
    auto a = std::make_shared<Args>();
    auto* sc = hom->add_subcommand(
        "snf", "Smith normal form with unimodular transforms");
    sc->add_option("--matrix", a->matrix, "rows split by ';', e.g. 1,1;-1,1")
        ->required();
    leaf(sc, a, [](const Args& a) {
      auto m = parse_matrix(a.matrix);
      auto snf = psc::homalg::smith_normal_form(m);
      auto coker = psc::homalg::cokernel_invariants(m);
      Report rep;
      rep.command = "homalg snf";
      rep.inputs = {{"matrix", matrix_str(m)}};
      rep.result = {{"d", matrix_json(snf.d)},
                    {"u", matrix_json(snf.u)},
                    {"v", matrix_json(snf.v)},
                    {"cokernel", group_json(coker)}};
      rep.refs = {"smith normal form"};
      rep.human = "d = " + matrix_str(snf.d) + "\nu = " + matrix_str(snf.u) +
                  "\nv = " + matrix_str(snf.v) +
                  "\ncokernel = " + group_str(coker);
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = hom->add_subcommand(
        "cokernel", "invariant factors of the cokernel of an integer matrix");
    sc->add_option("--matrix", a->matrix, "rows split by ';'")->required();
    leaf(sc, a, [](const Args& a) {
      auto m = parse_matrix(a.matrix);
      auto coker = psc::homalg::cokernel_invariants(m);
      Report rep;
      rep.command = "homalg cokernel";
      rep.inputs = {{"matrix", matrix_str(m)}};
      rep.result = group_json(coker);
      rep.refs = {"smith normal form"};
      rep.human = "cokernel = " + group_str(coker);
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = hom->add_subcommand(
        "betti", "Betti numbers of an integral homology over a field");
    sc->add_option("--ranks", a->ranks, "free ranks in degrees 0..top")
        ->required();
    sc->add_option("--torsion", a->torsion,
                   "torsion orders by degree, e.g. 2:2;4:3,3");
    sc->add_option("--field", a->coeff_field, "Q or Fp (p prime)")
        ->required();
    leaf(sc, a, [](const Args& a) {
      auto h = parse_homology(a.ranks, a.torsion);
      auto field = parse_coeff_field(a.coeff_field);
      auto betti = psc::homalg::betti_over_field(h, field);
      Report rep;
      rep.command = "homalg betti";
      rep.inputs = {{"ranks", a.ranks},
                    {"torsion", a.torsion},
                    {"field", a.coeff_field}};
      rep.result = {{"betti", betti}};
      rep.refs = {"betti numbers over a field"};
      std::string human = "betti =";
      for (int b : betti) human += " " + std::to_string(b);
      rep.human = human;
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = hom->add_subcommand(
        "semichar", "Kervaire semi-characteristic over a field");
    sc->add_option("--ranks", a->ranks, "free ranks in degrees 0..top")
        ->required();
    sc->add_option("--torsion", a->torsion, "torsion orders by degree");
    sc->add_option("--field", a->coeff_field, "Q or Fp (p prime)")
        ->required();
    leaf(sc, a, [](const Args& a) {
      auto h = parse_homology(a.ranks, a.torsion);
      auto field = parse_coeff_field(a.coeff_field);
      if (h.top() % 2 == 0)
        throw std::invalid_argument("top degree must be odd");
      int m = (h.top() - 1) / 2;
      int v = psc::homalg::semi_characteristic(h, field, m);
      Report rep;
      rep.command = "homalg semichar";
      rep.inputs = {{"ranks", a.ranks},
                    {"torsion", a.torsion},
                    {"field", a.coeff_field}};
      rep.result = {{"value", v}};
      rep.refs = {"kervaire semi-characteristic"};
      rep.human = "semi-characteristic = " + std::to_string(v);
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = hom->add_subcommand(
        "lmp", "difference of rational and mod-2 semi-characteristics");
    sc->add_option("--ranks", a->ranks, "free ranks in degrees 0..top")
        ->required();
    sc->add_option("--torsion", a->torsion, "torsion orders by degree");
    leaf(sc, a, [](const Args& a) {
      auto h = parse_homology(a.ranks, a.torsion);
      int v = psc::homalg::lmp_difference(h);
      Report rep;
      rep.command = "homalg lmp";
      rep.inputs = {{"ranks", a.ranks}, {"torsion", a.torsion}};
      rep.result = {{"value", v}};
      rep.refs = {"semi-characteristic gap"};
      rep.human = "difference = " + std::to_string(v);
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = hom->add_subcommand(
        "hilbert", "coefficients of the graded series of a polynomial ring");
    sc->add_option("--degrees", a->degrees, "generator degrees, e.g. 4,8")
        ->required();
    sc->add_option("--max-degree", a->max_degree, "truncation degree")
        ->required();
    leaf(sc, a, [](const Args& a) {
      std::vector<long> degrees;
      for (const auto& part : split(a.degrees, ','))
        degrees.push_back(parse_long(part));
      auto hs = psc::homalg::hilbert_series(degrees,
                                            static_cast<int>(a.max_degree));
      Report rep;
      rep.command = "homalg hilbert";
      rep.inputs = {{"degrees", degrees}, {"max_degree", a.max_degree}};
      ojson coeffs = ojson::array();
      std::string human = "coeffs =";
      for (const auto& c : hs.coeffs) {
        coeffs.push_back(c.get_str());
        human += " " + c.get_str();
      }
      rep.result = {{"coeffs", coeffs}};
      rep.refs = {"graded series"};
      rep.human = human;
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = hom->add_subcommand(
        "wall-degrees", "torsion-sensitive generator degrees up to a bound");
    sc->add_option("--max-degree", a->max_degree, "largest degree kept")
        ->required();
    leaf(sc, a, [](const Args& a) {
      auto degs = psc::homalg::wall_generator_degrees(a.max_degree);
      Report rep;
      rep.command = "homalg wall-degrees";
      rep.inputs = {{"max_degree", a.max_degree}};
      rep.result = {{"degrees", degs}};
      rep.refs = {"torsion-sensitive generator catalog"};
      std::string human = "degrees =";
      for (long d : degs) human += " " + std::to_string(d);
      rep.human = human;
      return rep;
    });
  }
  {
    auto a = std::make_shared<Args>();
    auto* sc = hom->add_subcommand(
        "thom-degrees", "rational generator degrees up to a bound");
    sc->add_option("--max-degree", a->max_degree, "largest degree kept")
        ->required();
    leaf(sc, a, [](const Args& a) {
      auto degs = psc::homalg::thom_generator_degrees(a.max_degree);
      Report rep;
      rep.command = "homalg thom-degrees";
      rep.inputs = {{"max_degree", a.max_degree}};
      rep.result = {{"degrees", degs}};
      rep.refs = {"rational generator catalog"};
      std::string human = "degrees =";
      for (long d : degs) human += " " + std::to_string(d);
      rep.human = human;
      return rep;
    });
  }

  // ---- paper-check -----------------------------------------------------------
  {
    auto* sc = app.add_subcommand(
        "paper-check",
        "run every verification group and report claim-by-claim results");
    sc->fallthrough();
    sc->callback([&action, &opt] {
      action = [&opt] {
        psc::checks::CheckOptions copt;
        copt.seed = opt.seed;
        auto results = psc::checks::run_criteria(copt);
        Report rep;
        rep.command = "paper-check";
        rep.inputs = {{"seed", opt.seed}};
        ojson criteria = ojson::array();
        std::string human;
        int criteria_passed = 0;
        long claims = 0, claims_passed = 0;
        for (const auto& cr : results) {
          bool p = cr.pass();
          criteria_passed += p;
          ojson items = ojson::array();
          char head[160];
          std::snprintf(head, sizeof head, "criterion %2d: %s [%s]\n",
                        cr.number, cr.title.c_str(), p ? "PASS" : "FAIL");
          human += head;
          for (const auto& it : cr.items) {
            ++claims;
            claims_passed += it.pass;
            items.push_back({{"claim", it.claim},
                             {"computed", it.computed},
                             {"expected", it.expected},
                             {"pass", it.pass}});
            human += std::string("  ") + (it.pass ? "pass  " : "FAIL  ") +
                     it.claim + ": " + it.computed + " (expected " +
                     it.expected + ")\n";
          }
          criteria.push_back({{"number", cr.number},
                              {"title", cr.title},
                              {"pass", p},
                              {"items", items}});
          rep.refs.push_back(cr.title);
        }
        rep.ok = criteria_passed == static_cast<int>(results.size());
        rep.result = {{"criteria", criteria},
                      {"criteria_passed", criteria_passed},
                      {"criteria_total", static_cast<int>(results.size())},
                      {"claims_passed", claims_passed},
                      {"claims_total", claims},
                      {"all_pass", rep.ok}};
        human += "summary: " + std::to_string(criteria_passed) + "/" +
                 std::to_string(results.size()) + " criteria, " +
                 std::to_string(claims_passed) + "/" + std::to_string(claims) +
                 " claims passed\n";
        rep.human = human;
        return rep;
      };
    });
  }

  // ---- sweep-region ------------------------------------------------------------
  {
    auto a = std::make_shared<Args>();
    auto* sc = app.add_subcommand(
        "sweep-region",
        "tabulate region feasibility over a dyadic grid (CSV by default)");
    sc->add_option("--field", a->field, "base field: R, C or H")->required();
    sc->add_option("--n", a->n, "dimension of the first base factor")
        ->required();
    sc->add_option("--m", a->m, "dimension of the second base factor")
        ->required();
    sc->add_option("--grid", a->grid, "points per axis (>= 2)")
        ->capture_default_str();
    sc->fallthrough();
    sc->callback([&action, a, &opt] {
      action = [a, &opt] {
        Field k = parse_field(a->field);
        auto p = psc::curvature::region_problem_from(k, a->n, a->m);
        auto g = psc::sweeps::region_feasibility_grid(
            p, static_cast<int>(a->grid), psc::sweeps::Mode::Parallel);
        Report rep;
        rep.command = "sweep-region";
        rep.inputs = {{"field", field_name(k)},
                      {"n", a->n},
                      {"m", a->m},
                      {"grid", a->grid}};
        rep.refs = {"positivity region sweep"};
        long feasible_count = 0;
        for (auto f : g.feasible) feasible_count += f;
        if (opt.json) {
          ojson rows = ojson::array();
          for (int xi = 0; xi < g.grid; ++xi)
            for (int yi = 0; yi < g.grid; ++yi) {
              std::size_t cell =
                  static_cast<std::size_t>(xi) *
                      static_cast<std::size_t>(g.grid) +
                  static_cast<std::size_t>(yi);
              rows.push_back(
                  ojson::array({g.points[static_cast<std::size_t>(xi)]
                                    .get_str(),
                                g.points[static_cast<std::size_t>(yi)]
                                    .get_str(),
                                static_cast<int>(g.feasible[cell])}));
            }
          rep.result = {{"x_max", g.x_max.get_str()},
                        {"feasible_count", feasible_count},
                        {"rows", rows}};
        } else {
          std::string csv = "x,y,feasible\n";
          for (int xi = 0; xi < g.grid; ++xi)
            for (int yi = 0; yi < g.grid; ++yi) {
              std::size_t cell =
                  static_cast<std::size_t>(xi) *
                      static_cast<std::size_t>(g.grid) +
                  static_cast<std::size_t>(yi);
              char line[112];
              std::snprintf(
                  line, sizeof line, "%.12g,%.12g,%d\n",
                  g.points[static_cast<std::size_t>(xi)].get_d(),
                  g.points[static_cast<std::size_t>(yi)].get_d(),
                  static_cast<int>(g.feasible[cell]));
              csv += line;
            }
          rep.human = csv;
          rep.csv = true;
        }
        return rep;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (!action) {
    std::cerr << app.help();
    return 2;
  }
  try {
    Report rep = action();
    return emit(rep, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
