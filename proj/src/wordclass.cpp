#include "decim/wordclass.hpp"

#include <algorithm>
#include <numeric>

namespace decim {

namespace {

void check_cyclic_part(const StepWord& a) {
  if (a.empty()) throw std::domain_error("empty word");
  if (a.base() != 1) throw std::invalid_argument("cyclic part must use the plain alphabet {1,2}");
}

std::uint64_t weight(const StepWord& w) {
  return std::accumulate(w.steps().begin(), w.steps().end(), std::uint64_t{0});
}

// P2: residues 0, a_0, a_0+a_1, ..., a_0+...+a_{l-2} pairwise distinct mod t.
bool partial_sums_distinct(const StepWord& a, std::uint64_t t) {
  if (a.size() > t) return false;
  std::vector<char> seen(t, 0);
  std::uint64_t sum = 0;
  seen[0] = 1;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    sum = (sum + a.steps()[i]) % t;
    if (seen[sum]) return false;
    seen[sum] = 1;
  }
  return true;
}

std::vector<std::uint64_t> p2_residues(const StepWord& a, std::uint64_t t) {
  std::vector<std::uint64_t> residues;
  residues.reserve(a.size());
  std::uint64_t sum = 0;
  residues.push_back(0);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    sum = (sum + a.steps()[i]) % t;
    residues.push_back(sum);
  }
  return residues;
}

struct PrefixCandidate {
  std::vector<Step> letters;  // word order; extension prepends
  std::uint64_t weight = 0;
  std::vector<std::uint64_t> residues;  // -suffix sums mod t, newest first
};

}  // namespace

std::string_view omega_name(OmegaClass cls) {
  switch (cls) {
    case OmegaClass::Omega1: return "Omega1";
    case OmegaClass::Omega2: return "Omega2";
    case OmegaClass::Omega3: return "Omega3";
    case OmegaClass::Omega4: return "Omega4";
  }
  throw std::logic_error("unknown class");
}

std::vector<std::uint64_t> admissible_moduli(const StepWord& a) {
  check_cyclic_part(a);
  const std::uint64_t w = weight(a);
  std::vector<std::uint64_t> result;
  for (std::uint64_t d = 1; d * d <= w; ++d) {
    if (w % d != 0) continue;
    if (partial_sums_distinct(a, d)) result.push_back(d);
    const std::uint64_t e = w / d;
    if (e != d && partial_sums_distinct(a, e)) result.push_back(e);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<StepWord> prefix_set(const StepWord& a, std::uint64_t t) {
  check_cyclic_part(a);
  const auto moduli = admissible_moduli(a);
  if (!std::binary_search(moduli.begin(), moduli.end(), t))
    throw std::domain_error("inadmissible modulus");

  std::vector<char> occupied(t, 0);
  for (const std::uint64_t r : p2_residues(a, t)) occupied[r] = 1;

  std::vector<StepWord> result;
  result.emplace_back();  // epsilon is a prefix at every admissible modulus

  // Breadth-first by length, prepending letters. A candidate whose residues
  // already collide cannot be repaired by prepending, so failures are dropped.
  std::vector<PrefixCandidate> level{PrefixCandidate{}};
  for (std::uint64_t len = 1; len <= t && !level.empty(); ++len) {
    std::vector<PrefixCandidate> next_level;
    for (const PrefixCandidate& cand : level) {
      for (const Step c : {Step{1}, Step{2}}) {
        const std::uint64_t new_residue = (t - (c + cand.weight) % t) % t;
        if (occupied[new_residue]) continue;
        if (std::find(cand.residues.begin(), cand.residues.end(), new_residue) !=
            cand.residues.end())
          continue;
        PrefixCandidate ext;
        ext.letters.reserve(cand.letters.size() + 1);
        ext.letters.push_back(c);
        ext.letters.insert(ext.letters.end(), cand.letters.begin(), cand.letters.end());
        ext.weight = cand.weight + c;
        ext.residues = cand.residues;
        ext.residues.push_back(new_residue);
        result.emplace_back(ext.letters, 1);
        next_level.push_back(std::move(ext));
      }
    }
    level = std::move(next_level);
  }

  std::sort(result.begin(), result.end(), [](const StepWord& lhs, const StepWord& rhs) {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return lhs.steps() < rhs.steps();
  });
  return result;
}

OmegaClass classify(const StepWord& a) {
  check_cyclic_part(a);
  const auto& s = a.steps();
  const std::size_t ones = static_cast<std::size_t>(std::count(s.begin(), s.end(), Step{1}));
  if (ones == 0) return OmegaClass::Omega4;
  if (s.back() == 2) return OmegaClass::Omega3;
  return ones == 1 ? OmegaClass::Omega1 : OmegaClass::Omega2;
}

ConfigCount count_configs(std::uint64_t n1, std::uint64_t n2, std::uint64_t m1,
                          std::uint64_t m2, std::uint64_t t) {
  if (t == 0) throw std::domain_error("modulus must be positive");
  ConfigCount result{n1, n2, m1, m2, t, 0};
  if (n1 + n2 == 0) return result;  // cyclic part is nonempty

  std::vector<Step> letters(n1, 1);
  letters.insert(letters.end(), n2, 2);
  do {
    const StepWord a(letters, 1);
    const auto moduli = admissible_moduli(a);
    if (!std::binary_search(moduli.begin(), moduli.end(), t)) continue;
    for (const StepWord& b : prefix_set(a, t)) {
      const auto b_ones =
          static_cast<std::uint64_t>(std::count(b.steps().begin(), b.steps().end(), Step{1}));
      if (b_ones == m1 && b.size() - b_ones == m2) ++result.count;
    }
  } while (std::next_permutation(letters.begin(), letters.end()));
  return result;
}

std::map<ConfigKey, std::uint64_t> enumerate_configs(std::uint32_t max_modulus,
                                                     std::optional<OmegaClass> only_class) {
  std::map<ConfigKey, std::uint64_t> counts;
  if (max_modulus == 0) return counts;

  // Admissibility needs l(a) pairwise distinct residues, so l(a) <= t.
  std::vector<Step> letters;
  auto visit = [&](auto&& self) -> void {
    if (!letters.empty()) {
      const StepWord a(letters, 1);
      if (!only_class || classify(a) == *only_class) {
        const auto n1 = static_cast<std::uint32_t>(
            std::count(letters.begin(), letters.end(), Step{1}));
        const auto n2 = static_cast<std::uint32_t>(letters.size()) - n1;
        for (const std::uint64_t t : admissible_moduli(a)) {
          if (t > max_modulus) continue;
          for (const StepWord& b : prefix_set(a, t)) {
            const auto m1 = static_cast<std::uint32_t>(
                std::count(b.steps().begin(), b.steps().end(), Step{1}));
            const auto m2 = static_cast<std::uint32_t>(b.size()) - m1;
            ++counts[ConfigKey{n1, n2, m1, m2, static_cast<std::uint32_t>(t)}];
          }
        }
      }
    }
    if (letters.size() >= max_modulus) return;
    for (const Step c : {Step{1}, Step{2}}) {
      letters.push_back(c);
      self(self);
      letters.pop_back();
    }
  };
  visit(visit);
  return counts;
}

}  // namespace decim
