#include "pss/induction.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace pss {

void validate(const OstensiveDefinition& def) {
  if (!def.vocab) fail(Err::invalid_vocabulary, "ostensive definition without a vocabulary");
  const Vocabulary& v = *def.vocab;
  for (const std::string& s : def.covered_situations) {
    if (s.size() != v.sensor_count()) {
      fail(Err::length_mismatch, "covered situation '" + s + "' has wrong length");
    }
  }
  for (Bits p : def.positives) {
    const std::string s = project_bits(v, p, Channel::sensor);
    if (!def.covered_situations.count(s)) {
      fail(Err::invariant_violation,
           "positive state " + assignment_string(v, p) + " has uncovered situation " + s);
    }
    if (def.explicit_negatives.count(p)) {
      fail(Err::inconsistent,
           "state " + assignment_string(v, p) + " labeled both positive and negative");
    }
  }
  if (def.closed_world && !def.explicit_negatives.empty()) {
    fail(Err::invariant_violation, "closed-world definition carries explicit negatives");
  }
}

LabelledSpace materialize(const OstensiveDefinition& def) {
  validate(def);
  const Vocabulary& v = *def.vocab;
  LabelledSpace out;
  out.positives.assign(def.positives.begin(), def.positives.end());
  if (def.closed_world) {
    const std::size_t m = v.actuator_count();
    const Bits responses = Bits{1} << m;
    for (const std::string& s : def.covered_situations) {
      for (Bits r = 0; r < responses; ++r) {
        std::string rbits(m, '0');
        for (std::size_t j = 0; j < m; ++j) {
          if ((r >> (m - 1 - j)) & 1) rbits[j] = '1';
        }
        const Bits state = compose_bits(v, s, rbits);
        if (!def.positives.count(state)) out.negatives.push_back(state);
      }
    }
  } else {
    out.negatives.assign(def.explicit_negatives.begin(), def.explicit_negatives.end());
  }
  const std::size_t n = v.size();
  auto lex = [n](Bits a, Bits b) { return lex_less_bits(a, b, n); };
  std::sort(out.positives.begin(), out.positives.end(), lex);
  std::sort(out.negatives.begin(), out.negatives.end(), lex);
  return out;
}

namespace {

inline std::uint64_t cube_key(const Implicant& c) {
  return (static_cast<std::uint64_t>(c.mask) << 32) | c.value;
}

}  // namespace

Concept induce(const OstensiveDefinition& def) {
  const LabelledSpace space = materialize(def);
  if (space.positives.empty()) {
    fail(Err::empty_positives, "ostensive definition has no positive examples");
  }
  const std::size_t n = def.vocab->size();
  const Bits full = n >= 32 ? ~Bits{0} : (Bits{1} << n) - 1;

  // A cube is admissible when it contains no negative; anchoring at a
  // positive is guaranteed by construction, since search starts from the
  // positive points and only ever grows cubes.
  auto admissible = [&](const Implicant& c) {
    for (Bits neg : space.negatives) {
      if (c.contains(neg)) return false;
    }
    return true;
  };

  std::unordered_map<std::uint64_t, bool> admissible_cache;
  auto admissible_cached = [&](const Implicant& c) {
    const std::uint64_t key = cube_key(c);
    auto it = admissible_cache.find(key);
    if (it != admissible_cache.end()) return it->second;
    const bool a = admissible(c);
    admissible_cache.emplace(key, a);
    return a;
  };

  std::unordered_set<std::uint64_t> queued;
  std::deque<Implicant> queue;
  for (Bits p : space.positives) {
    const Implicant seed{full, p};
    if (queued.insert(cube_key(seed)).second) queue.push_back(seed);
  }

  std::vector<Implicant> primes;
  while (!queue.empty()) {
    const Implicant cube = queue.front();
    queue.pop_front();
    bool prime = true;
    Bits m = cube.mask;
    while (m) {
      const Bits bit = m & (Bits{0} - m);  // lowest set bit
      m &= m - 1;
      const Implicant child{cube.mask & ~bit, cube.value & ~bit};
      if (!admissible_cached(child)) continue;
      prime = false;
      if (queued.insert(cube_key(child)).second) queue.push_back(child);
    }
    if (prime) primes.push_back(cube);
  }
  return Concept(def.vocab, std::move(primes));
}

Concept oracle_induce(const OstensiveDefinition& def) {
  if (!def.vocab) fail(Err::invalid_vocabulary, "ostensive definition without a vocabulary");
  const std::size_t n = def.vocab->size();
  if (n > kOracleMaxBits) {
    fail(Err::vocabulary_too_large,
         "oracle induction is capped at " + std::to_string(kOracleMaxBits) + " bits");
  }
  const LabelledSpace space = materialize(def);
  if (space.positives.empty()) {
    fail(Err::empty_positives, "ostensive definition has no positive examples");
  }

  enum : std::int8_t { kDontCare = 0, kPositive = 1, kNegative = 2 };
  std::vector<std::int8_t> label(std::size_t{1} << n, kDontCare);
  for (Bits p : space.positives) label[p] = kPositive;
  for (Bits q : space.negatives) label[q] = kNegative;

  // Walk every state of a cube: the fixed bits come from value, the free
  // bits run through all subsets.
  const Bits full = n == 0 ? 0 : (Bits{1} << n) - 1;
  auto scan = [&](const Implicant& c, bool& has_positive, bool& has_negative) {
    has_positive = false;
    has_negative = false;
    const Bits free = full & ~c.mask;
    Bits sub = free;
    while (true) {
      const std::int8_t l = label[c.value | sub];
      if (l == kPositive) has_positive = true;
      if (l == kNegative) has_negative = true;
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
  };

  std::vector<Implicant> primes;
  // Ternary counter over the symbols: 0 = free, 1 = fixed 0, 2 = fixed 1.
  std::vector<int> digits(n, 0);
  while (true) {
    Implicant cube;
    for (std::size_t i = 0; i < n; ++i) {
      if (digits[i] == 0) continue;
      cube.mask |= Bits{1} << i;
      if (digits[i] == 2) cube.value |= Bits{1} << i;
    }
    bool has_positive = false;
    bool has_negative = false;
    scan(cube, has_positive, has_negative);
    if (has_positive && !has_negative) {
      bool prime = true;
      Bits m = cube.mask;
      while (m && prime) {
        const Bits bit = m & (Bits{0} - m);
        m &= m - 1;
        const Implicant wider{cube.mask & ~bit, cube.value & ~bit};
        bool wp = false;
        bool wn = false;
        scan(wider, wp, wn);
        if (!wn) prime = false;  // the wider cube is still admissible
      }
      if (prime) primes.push_back(cube);
    }
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (++digits[i] < 3) break;
      digits[i] = 0;
    }
    if (i == n) break;
  }
  return Concept(def.vocab, std::move(primes));
}

NsReport verify_ns(const Concept& c, const OstensiveDefinition& def) {
  require_same_vocab(c.vocab(), def.vocab);
  const LabelledSpace space = materialize(def);
  NsReport report;
  for (Bits p : space.positives) {
    if (!c.evaluate_bits(p)) report.unsatisfied_positives.emplace_back(def.vocab, p);
  }
  for (Bits q : space.negatives) {
    if (c.evaluate_bits(q)) report.satisfied_negatives.emplace_back(def.vocab, q);
  }
  report.sufficient = report.unsatisfied_positives.empty();
  report.necessary = report.satisfied_negatives.empty();
  return report;
}

}  // namespace pss
