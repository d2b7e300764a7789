#pragma once

// Leaf orbits under sigma_d and checks of the central strip lemma, its
// unicritical corollary and the leaf growth lemma on concrete leaves.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lamkit/portrait.hpp"

namespace lamkit {

enum class Verdict { PASS, FAIL, INAPPLICABLE, TRUNCATED, EXCLUDED };
std::string verdict_name(Verdict v);

inline constexpr std::size_t kDefaultMaxIters = 4096;

struct OrbitTrace {
  int d = 2;
  std::vector<Chord> chords;  // l_0, l_1, ... without repeats
  std::vector<Rational> lengths;
  std::vector<Rational> critical_distance;  // 0 for degenerate iterates
  bool cycled = false;
  std::size_t cycle_start = 0;  // chords[cycle_start] is the first repeated chord
};

OrbitTrace orbit_trace(int d, const Chord& ch, std::size_t max_iters = kDefaultMaxIters);

// First i with tau^i(x) >= 1/(d+1). Throws std::domain_error unless
// 0 < x < 1/(d+1).
std::size_t leaf_growth(int d, const Rational& x);

// The closed chord meets the closed region somewhere other than a single
// shared vertex.
bool enters_region(const Chord& ch, const Region& r);

struct Reentry {
  std::size_t j = 0;
  Chord chord;
  std::vector<int> components;  // strip regions entered
  bool same_component = false;  // both endpoints in one closed short arc
  bool first = false;           // least j with a reentry
};

struct Part3Witness {
  std::size_t j = 0;
  std::size_t k = 0;
  Chord leaf_k;
  CriticalChord D;
  Rational bound;     // eta / d^(j-k)
  Rational achieved;  // d_E(l_k, D)
  bool outside_strip = false;
  bool valid = false;  // D critical, unlinked from l_k, achieved <= bound
  bool first = false;
};

struct LeafReport {
  int leaf = 0;
  Chord chord;
  Verdict verdict = Verdict::PASS;
  bool part1 = true;
  bool part2 = true;
  bool part3 = true;
  std::size_t iterations = 0;
  bool cycled = false;
  // l_j touching the strip in a single vertex only; not counted as reentry.
  std::size_t touch_only = 0;
  std::size_t degenerate = 0;  // iterates that collapsed to a point
  std::vector<Reentry> reentries;
  std::vector<Part3Witness> witnesses;
};

struct CSLReport {
  int d = 2;
  Chord image;
  std::vector<int> match;
  Verdict verdict = Verdict::PASS;
  std::string reason;
  std::optional<CentralStrip> strip;
  Rational eta;
  Rational long_arc;
  bool eta_bound = true;       // eta < 1/(d(d+1))
  bool image_length = true;    // |l_1| = d * eta
  std::vector<LeafReport> leaves;
};

// Every boundary leaf of the strip is tracked and reported separately.
// INAPPLICABLE when there is no strip, the long arc is not > 1/(d+1), or the
// orbit leaves and sibling leaves are not pairwise unlinked (no lamination
// contains them all).
CSLReport verify_csl(const SiblingCollection& coll, std::size_t max_iters = kDefaultMaxIters);

struct UnicriticalReport {
  Verdict verdict = Verdict::PASS;
  std::string reason;
  std::size_t same_component_reentries = 0;
  CSLReport csl;
};

UnicriticalReport verify_unicritical(const SiblingCollection& coll, std::size_t max_iters = kDefaultMaxIters);

struct CriticalSweep {
  Verdict verdict = Verdict::PASS;
  std::size_t index = 0;
  Rational value;
  std::vector<Rational> sequence;  // tau_3 iterates up to index
};

// First i with 1/4 < tau_3^i(x) < 5/12. EXCLUDED when x is eventually fixed.
CriticalSweep closest_critical_sweep(const Rational& x, std::size_t max_iters = kDefaultMaxIters);

struct SweepConfig {
  int d = 2;
  int denominator_max = 200;
  // Every image with denominator <= exhaustive_max is checked; above that
  // `samples` images are drawn uniformly from seed.
  int exhaustive_max = 200;
  std::size_t samples = 20000;
  std::uint64_t seed = 1;
  std::size_t max_iters = kDefaultMaxIters;
  unsigned threads = 0;  // 0: LAMKIT_THREADS or hardware concurrency
};

struct SweepResult {
  int d = 2;
  std::size_t images = 0;
  // Images whose forward orbit is pairwise unlinked.
  std::size_t compatible_images = 0;
  // Collections (with a strip) unlinked from that orbit; only these are checked.
  std::size_t collections = 0;
  std::size_t leaves = 0;
  std::size_t part1_violations = 0;
  std::size_t part2_violations = 0;
  // First reentries with both endpoints in one short arc, and how many of
  // them have a witness D outside the strip within the bound.
  std::size_t first_same_component = 0;
  std::size_t first_witnessed = 0;
  // Later same-component reentries; informational.
  std::size_t later_same_component = 0;
  std::size_t later_witnessed = 0;
  std::size_t touch_only = 0;
  std::size_t truncated = 0;
  std::size_t eta_bound_violations = 0;
  std::vector<CSLReport> failures;  // first few failing reports
  bool complete = true;
};

SweepResult csl_sweep(const SweepConfig& cfg);

unsigned default_threads();

}  // namespace lamkit
