// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "fintop/beat_retracts.hpp"
#include "fintop/cli.hpp"
#include "fintop/cofibration.hpp"
#include "fintop/cylinder.hpp"
#include "fintop/io.hpp"
#include "fintop/oracle.hpp"

using namespace fintop;
using namespace fixtures;

namespace {

struct Context {
  std::vector<std::string> failures;
  std::size_t checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
};

std::vector<Subspace> all_subsets(const FiniteSpace& x) {
  std::vector<Subspace> out;
  for (std::uint64_t mask = 0; mask < (1ULL << x.size()); ++mask) {
    std::vector<bool> bits(x.size());
    for (Element v = 0; v < x.size(); ++v) bits[v] = (mask >> v) & 1;
    out.push_back(Subspace::from_mask(x, bits));
  }
  return out;
}

std::string show(const FiniteSpace& x, const Subspace& a) {
  std::string s = "{";
  for (Element v : a.indices()) s += (s.size() > 1 ? "," : "") + x.label(v);
  return s + "}";
}

std::string tag(std::uint64_t seed, const FiniteSpace& x, const Subspace& a) {
  return "seed " + std::to_string(seed) + " A=" + show(x, a);
}

bool subset_of(const Subspace& small, const Subspace& big) {
  return std::includes(big.indices().begin(), big.indices().end(), small.indices().begin(), small.indices().end());
}

Subspace intersect(const FiniteSpace& x, const Subspace& l, const Subspace& r) {
  std::vector<bool> bits(x.size());
  for (Element v = 0; v < bits.size(); ++v) bits[v] = l.contains(v) && r.contains(v);
  return Subspace::from_mask(x, bits);
}

Subspace random_subset(const FiniteSpace& x, oracle::Rng& rng) {
  std::vector<bool> bits(x.size());
  for (Element v = 0; v < x.size(); ++v) bits[v] = rng.chance(1, 3);
  return Subspace::from_mask(x, bits);
}

// Random order-preserving map: assign along a linear extension, choosing
// among the upper bounds of the values already forced from below.
SpaceMap random_map(const FiniteSpace& x, const FiniteSpace& y, oracle::Rng& rng) {
  std::vector<Element> order(x.size());
  for (Element v = 0; v < x.size(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Element l, Element r) {
    return min_open_set(x, l).size() < min_open_set(x, r).size();
  });
  for (int attempt = 0; attempt < 50; ++attempt) {
    std::vector<Element> values(x.size(), 0);
    bool stuck = false;
    for (Element v : order) {
      std::vector<Element> options;
      for (Element t = 0; t < y.size(); ++t) {
        bool above = true;
        for (Element z = 0; z < x.size() && above; ++z)
          if (x.lt(z, v) && !y.leq(values[z], t)) above = false;
        if (above) options.push_back(t);
      }
      if (options.empty()) {
        stuck = true;
        break;
      }
      values[v] = options[rng.below(options.size())];
    }
    if (!stuck) return make_map(x, y, values);
  }
  return constant_map(x, y, rng.below(y.size()));
}

// 1. X8 golden fixture
void golden_x8(Context& c) {
  const auto x = x8();
  const auto a = sub(x, {"a", "b", "c", "d"});
  const auto rem = is_dbp_retract_removal(x, a);
  std::set<std::string> removed;
  for (const auto& step : rem.trace) removed.insert(x.label(step.removed));
  c.expect(rem.is_retract, "(a) {a,b,c,d} not a dbp-retract");
  c.expect(rem.trace.size() == 4, "(a) trace length " + std::to_string(rem.trace.size()));
  c.expect(removed == std::set<std::string>{"e", "f", "g", "h"}, "(a) trace removes other points");
  c.expect(replays_as_dbp_trace(x, rem.trace, a), "(a) trace does not replay");
  c.expect(is_dbp_retract_maxcriterion(x, a).ok(), "(a) max criterion disagrees");

  const auto b = sub(x, {"a", "b", "d", "g"});
  const auto fail = is_dbp_retract_maxcriterion(x, b);
  c.expect(!fail.ok(), "(b) {a,b,d,g} reported as a dbp-retract");
  c.expect(fail.failure_witness && x.label(*fail.failure_witness) == "c", "(b) witness is not c");
  c.expect(names(x, fail.witness_set) == Names{"a", "b"}, "(b) U_c ∩ B is not {a,b}");
  c.expect(!is_dbp_retract_removal(x, b).is_retract, "(b) removal algorithm disagrees");

  const auto core = minimal_dbp_retract(x, b).retract;
  c.expect(names(x, core) == Names{"a", "b", "c", "d", "g"}, "(c) minimal dbp-retract is " + show(x, core));

  const auto search = beat_point_retract_search(x, b, 1'000'000);
  const bool mixed = std::any_of(search.sequence.begin(), search.sequence.end(),
                                 [](const BeatRemoval& r) { return r.kind == BeatRemoval::Kind::Up; });
  c.expect(search.found, "(d) beat point search failed");
  c.expect(replays_as_beat_sequence(x, search.sequence, b), "(d) sequence does not replay");
  c.expect(mixed, "(d) sequence uses no up beat point");
}

// 2. Sierpinski space
void sierpinski_verdicts(Context& c) {
  const auto s = sierpinski();
  const auto zero = is_cofibration_inclusion(s, sub(s, {"0"}));
  c.expect(zero.verdict, "{0} -> S not a cofibration");
  c.expect(zero.assembled_retraction && compose(inclusion_map(s, sub(s, {"0"})), *zero.assembled_retraction) ==
                                          constant_map(s, s, 0),
           "{0} -> S retraction is not constant 0");
  c.expect(!is_cofibration_inclusion(s, sub(s, {"1"})).verdict, "{1} -> S reported as a cofibration");
  c.expect(is_well_pointed(s, 0), "(S,0) not well-pointed");
  c.expect(!is_well_pointed(s, 1), "(S,1) reported well-pointed");
}

// 3. non-T0 map whose T0 reflection is a homeomorphism
void non_t0_separation(Context& c) {
  const auto f = make_map(indiscrete_pair(), point(), {0, 0});
  c.expect(!is_cofibration_map(f).verdict, "collapse map reported as a cofibration");
  c.expect(is_homeomorphism(induced_t0_map(f)), "induced T0 map is not a homeomorphism");
}

// 4. max criterion vs removal vs brute force
void algorithm_equivalence(Context& c) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto x = oracle::random_space({seed, seed % 8, 1 + seed % 3, 4, true, false});
    for (const auto& a : all_subsets(x)) {
      const auto cert = is_dbp_retract_maxcriterion(x, a);
      const bool removal = is_dbp_retract_removal(x, a).is_retract;
      const auto brute = oracle::brute_force_retractions(x, a);
      c.expect(cert.ok() == removal, tag(seed, x, a) + ": max criterion vs removal");
      c.expect(cert.ok() == !brute.empty(), tag(seed, x, a) + ": max criterion vs brute force");
      if (cert.ok()) {
        c.expect(brute.size() == 1, tag(seed, x, a) + ": " + std::to_string(brute.size()) + " retractions");
        c.expect(!brute.empty() && brute.front() == *cert.retraction, tag(seed, x, a) + ": retraction differs");
        c.expect(!brute.empty() && compose(inclusion_map(x, a), brute.front()) == canonical_idempotent(x, a),
                 tag(seed, x, a) + ": not the canonical idempotent");
      }
    }
  }
}

// 5. cofibration verdict vs existence of a retraction, connected preorders
void cofibration_oracle(Context& c) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto x = oracle::random_space({seed, 1 + seed % 6, 1, 2, seed % 3 == 0, true});
    for (const auto& a : all_subsets(x)) {
      if (a.empty()) continue;
      const bool verdict = is_cofibration_inclusion(x, a).verdict;
      const bool exists = !oracle::brute_force_retractions(x, a).empty();
      c.expect(verdict == exists, tag(seed, x, a) + ": verdict " + std::to_string(verdict));
    }
  }
}

// 6. structure of Ω(X,A) and 𝓕(X,A)
void omega_f_structure(Context& c) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto x = oracle::random_space({seed, 1 + seed % 6, 1, 2, true, false});
    oracle::Rng rng(seed);
    for (const auto& a : {Subspace::none(x), random_subset(x, rng)}) {
      const auto omega = oracle::enumerate_Omega(x, a);
      const std::set<ElementSet> family = [&] {
        std::set<ElementSet> s;
        for (const auto& w : omega) s.insert(w.indices());
        return s;
      }();
      for (const auto& u : omega)
        for (const auto& v : omega)
          c.expect(family.count(intersect(x, u, v).indices()) == 1, tag(seed, x, a) + ": Ω not closed under ∩");
      const auto core = minimal_dbp_retract(x, a).retract;
      c.expect(family.count(core.indices()) == 1, tag(seed, x, a) + ": core not in Ω");
      for (const auto& w : omega) c.expect(subset_of(core, w), tag(seed, x, a) + ": core is not the minimum");

      const auto fs = oracle::enumerate_F(x, a);
      std::set<ElementSet> images;
      for (const auto& f : fs) images.insert(image(f).indices());
      c.expect(images == family && images.size() == fs.size(), tag(seed, x, a) + ": f -> f(X) not a bijection");
      for (const auto& f : fs)
        for (const auto& g : fs)
          c.expect(map_leq(f, g) == subset_of(image(f), image(g)), tag(seed, x, a) + ": order not preserved");
    }

    const auto fs = oracle::enumerate_F(x, Subspace::none(x));
    const auto id = identity_map(x);
    for (const auto& f : fs) {
      c.expect(star(f, id) == f && star(id, f) == f, "seed " + std::to_string(seed) + ": Id is not the identity");
      c.expect(star(f, f) == f, "seed " + std::to_string(seed) + ": star not idempotent");
      for (const auto& g : fs) {
        const auto fg = star(f, g);
        c.expect(fg == star(g, f), "seed " + std::to_string(seed) + ": star not commutative");
        c.expect(image(fg) == intersect(x, image(f), image(g)), "seed " + std::to_string(seed) + ": image law");
        for (const auto& h : fs)
          c.expect(star(fg, h) == star(f, star(g, h)), "seed " + std::to_string(seed) + ": star not associative");
      }
    }
  }
}

// 7. the minimal dbp-retract does not depend on the removal order
void order_independence(Context& c) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto x = oracle::random_space({seed, 4 + seed % 7, 1, 2, true, false});
    oracle::Rng rng(seed);
    for (const auto& a : {Subspace::none(x), random_subset(x, rng)}) {
      const auto expected = minimal_dbp_retract(x, a).retract;
      for (int k = 0; k < 20; ++k) {
        const auto order = rng.permutation(x.size());
        c.expect(minimal_dbp_retract(x, a, order).retract == expected, tag(seed, x, a) + ": order changes the result");
      }
    }
  }
}

// 8. closed, nonempty, proper subspaces of connected spaces
void closed_obstruction(Context& c) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto x = oracle::random_space({seed, 2 + seed % 6, 1, 2, seed % 2 == 0, true});
    for (const auto& a : all_subsets(x)) {
      if (a.empty() || a.size() == x.size() || !is_closed(x, a)) continue;
      c.expect(!is_cofibration_inclusion(x, a).verdict, tag(seed, x, a) + ": closed subspace is a cofibration");
      c.expect(closed_subspace_obstruction(x, a), tag(seed, x, a) + ": obstruction not detected");
    }
  }
}

// 9. the non-Hausdorff mapping cylinder
void cylinder_suite(Context& c) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto x = oracle::random_space({seed, 1 + seed % 5, 1, 2, true, false});
    const auto y = oracle::random_space({seed + 5000, 1 + seed % 4, 1, 2, true, true});
    oracle::Rng rng(seed);
    const auto f = random_map(x, y, rng);
    const auto cyl = build_cylinder(f);
    const std::string id = "seed " + std::to_string(seed);

    // f^{-1}(U_y) has a maximum for every y, computed directly
    bool criterion = true;
    for (Element t = 0; t < y.size(); ++t) {
      ElementSet pre;
      for (Element v = 0; v < x.size(); ++v)
        if (y.leq(f(v), t)) pre.push_back(v);
      bool has_max = false;
      for (Element m : pre)
        has_max = has_max || std::all_of(pre.begin(), pre.end(), [&](Element z) { return x.leq(z, m); });
      criterion = criterion && has_max;
    }
    const auto jx = jX_cofibration(cyl);
    const bool generic = is_cofibration_inclusion(cyl.space, cyl.x_part).verdict;
    c.expect(jx.criterion_used, id + ": criterion not used");
    c.expect(jx.verdict == criterion, id + ": jX verdict differs from the preimage criterion");
    c.expect(criterion == generic, id + ": preimage criterion differs from the generic verdict");

    c.expect(!is_cofibration_inclusion(cyl.space, cyl.y_part).verdict, id + ": j_Y is a cofibration");
    c.expect(jY_not_cofibration_check(cyl), id + ": j_Y check failed");
    c.expect(is_cofibration_inclusion(opposite(cyl.space), cyl.y_part).verdict, id + ": j_Y^op not a cofibration");
  }
}

// 10. up beat retracts are down beat retracts of the opposite space
void duality(Context& c) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto x = oracle::random_space({seed, seed % 8, 1, 2, true, false});
    const auto xop = opposite(x);
    for (const auto& a : all_subsets(x)) {
      const auto up = is_ubp_retract(x, a);
      c.expect(up.ok() == is_dbp_retract_maxcriterion(xop, a).ok(), tag(seed, x, a) + ": ubp vs dbp of X^op");
      c.expect(up.ok() == is_dbp_retract_removal(xop, a).is_retract, tag(seed, x, a) + ": ubp vs removal on X^op");
      if (up.ok()) {
        const auto& r = *up.retraction;
        for (Element v = 0; v < x.size(); ++v)
          c.expect(x.leq(v, a.indices()[r(v)]), tag(seed, x, a) + ": i∘r >= Id fails");
      }
    }
  }
}

// 11. the documented command lines
struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

#ifdef FINTOP_TOOL_PATH
CliRun run_tool(const std::vector<std::string>& args) {
  std::string command = "'" FINTOP_TOOL_PATH "'";
  for (const auto& a : args) command += " '" + a + "'";
  command += " 2>/dev/null";
  CliRun r{0, {}};
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}
#endif

void cli_contract(Context& c) {
  const std::string data = FINTOP_DATA_DIR;
  struct Case {
    std::vector<std::string> args;
    int code;
    std::function<bool(const io::Json&)> certificate_ok;
  };
  const std::vector<Case> cases{
      {{"check-cofibration", data + "/S.json", "--sub", "0"}, 0,
       [](const io::Json& d) { return d["certificate"]["retraction"] == io::Json::parse(R"([["1","0"]])"); }},
      {{"check-cofibration", data + "/S.json", "--sub", "1"}, 1,
       [](const io::Json& d) { return d["verdict"] == false && !d["certificate"].contains("retraction"); }},
      {{"core", data + "/X8.json", "--contain", "a,b,d,g"}, 0,
       [](const io::Json& d) {
         return d["certificate"]["subset"] == io::Json::parse(R"(["a","b","c","d","g"])");
       }},
  };
  for (const auto& k : cases) {
    const std::string id = k.args[0] + " " + k.args.back();
    const auto first = run_cli(k.args);
    const auto second = run_cli(k.args);
    c.expect(first.code == k.code, id + ": exit code " + std::to_string(first.code));
    c.expect(first.out == second.out && first.code == second.code, id + ": output differs between runs");
    c.expect(k.certificate_ok(io::Json::parse(first.out)), id + ": certificate");
#ifdef FINTOP_TOOL_PATH
    const auto t1 = run_tool(k.args);
    const auto t2 = run_tool(k.args);
    c.expect(t1.code == k.code && t2.code == k.code, id + ": binary exit code " + std::to_string(t1.code));
    c.expect(t1.out == t2.out && t1.out == first.out, id + ": binary output not byte-stable");
#endif
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Context&)>> criteria{
      {"1  golden fixture X8", golden_x8},
      {"2  Sierpinski verdicts and well-pointedness", sierpinski_verdicts},
      {"3  non-T0 collapse map", non_t0_separation},
      {"4  algorithm equivalence sweep", algorithm_equivalence},
      {"5  cofibration oracle sweep", cofibration_oracle},
      {"6  structure of Omega and F", omega_f_structure},
      {"7  removal-order independence", order_independence},
      {"8  closed subspace obstruction", closed_obstruction},
      {"9  mapping cylinder suite", cylinder_suite},
      {"10 up/down duality", duality},
      {"11 CLI contract", cli_contract},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Context c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << c.checks << " checks)\n";
    for (const auto& f : c.failures) std::cout << "     " << f << "\n";
  }
  return failed == 0 ? 0 : 1;
}
