#include "kostant/acceptance.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <set>
#include <sstream>

#include "kostant/alternation.hpp"
#include "kostant/combinatorics.hpp"
#include "kostant/multiplicity.hpp"
#include "kostant/partition.hpp"

namespace kostant::acceptance {

namespace {

// Collects the first mismatch and a running count of checks.
struct Tally {
  std::int64_t checks = 0;
  std::string failure;

  bool ok() const { return failure.empty(); }
  void expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition && failure.empty()) failure = what;
  }
};

template <class Body>
CriterionResult run_criterion(int id, std::string name, Body body) {
  CriterionResult result;
  result.id = id;
  result.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    Tally tally;
    std::string scope = body(tally);
    result.passed = tally.ok() && tally.checks > 0;
    result.detail = tally.ok() ? std::to_string(tally.checks) + " checks, " + scope
                               : "first mismatch: " + tally.failure;
    if (tally.checks == 0) result.detail = "no checks ran (" + scope + ")";
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("error: ") + e.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::string where(const RootInterval& iv) {
  return "r=" + std::to_string(iv.rank()) + " mu=" + iv.to_string();
}

QPolynomial q_sum_one_to(int r) {
  QPolynomial sum;
  for (int t = 1; t <= r; ++t) sum += QPolynomial::monomial(t);
  return sum;
}

}  // namespace

CriterionResult alternation_set_equality(const Options& o) {
  return run_criterion(1, "alternation set: brute force == characterization", [&](Tally& t) {
    for (int r = 1; r <= o.max_brute_rank; ++r) {
      for (const auto& iv : all_intervals(r)) {
        auto brute = alt_set_bruteforce(highest_root(r), interval_root(iv), o.brute_cap);
        auto characterized = alt_set_characterized(iv);
        t.expect(brute.same_elements(characterized),
                 where(iv) + ": brute force has " + std::to_string(brute.size()) +
                     " elements, characterization " + std::to_string(characterized.size()));
      }
    }
    return "r <= " + std::to_string(o.max_brute_rank);
  });
}

CriterionResult fibonacci_cardinality(const Options& o) {
  return run_criterion(2, "alternation set size == F_i * F_{r-j+1}", [&](Tally& t) {
    for (int r = 1; r <= o.max_cardinality_rank; ++r) {
      for (const auto& iv : all_intervals(r)) {
        const auto size = static_cast<std::int64_t>(alt_set_characterized(iv).size());
        t.expect(size == alt_cardinality(iv), where(iv) + ": |set| = " + std::to_string(size) +
                                                  ", formula " +
                                                  std::to_string(alt_cardinality(iv)));
      }
    }
    return "r <= " + std::to_string(o.max_cardinality_rank);
  });
}

CriterionResult q_multiplicity_kwmf(const Options& o) {
  return run_criterion(3, "m_q via full Weyl sum == q^(r-h)", [&](Tally& t) {
    for (int r = 1; r <= o.max_brute_rank; ++r) {
      for (const auto& iv : all_intervals(r)) {
        auto report = q_multiplicity(highest_root(r), interval_root(iv), Method::KwmfFull,
                                     o.brute_cap);
        t.expect(report.q_multiplicity == predicted_q_multiplicity(iv),
                 where(iv) + ": got " + report.q_multiplicity.to_string());
      }
    }
    return "r <= " + std::to_string(o.max_brute_rank);
  });
}

CriterionResult q_multiplicity_closed_forms(const Options& o) {
  return run_criterion(4, "m_q via closed-form terms == q^(r-h)", [&](Tally& t) {
    for (int r = 1; r <= o.max_closed_rank; ++r) {
      for (const auto& iv : all_intervals(r)) {
        auto value = q_multiplicity_closed(iv);
        t.expect(value == predicted_q_multiplicity(iv), where(iv) + ": got " + value.to_string());
      }
    }
    return "r <= " + std::to_string(o.max_closed_rank);
  });
}

CriterionResult multiplicity_one(const Options& o) {
  return run_criterion(5, "m(highest root, mu) == 1 for roots and their Weyl images",
                       [&](Tally& t) {
    for (int r = 1; r <= o.max_brute_rank; ++r) {
      for (const auto& iv : all_intervals(r)) {
        const auto m = multiplicity_at_one(highest_root(r), interval_root(iv), o.brute_cap);
        t.expect(m == 1, where(iv) + ": m = " + std::to_string(m));
      }
    }
    std::int64_t images_checked = 0;
    for (int r = 1; r <= o.max_weyl_image_rank; ++r) {
      std::set<Weight> images;
      for (const auto& iv : all_intervals(r)) {
        for (const auto& sigma : enumerate_all(r, o.brute_cap)) {
          images.insert(apply(sigma, interval_root(iv)));
        }
      }
      for (const auto& mu : images) {
        const auto m = multiplicity_at_one(highest_root(r), mu, o.brute_cap);
        t.expect(m == 1, "r=" + std::to_string(r) + " mu=" + mu.to_string() +
                             ": m = " + std::to_string(m));
        ++images_checked;
      }
    }
    return "intervals r <= " + std::to_string(o.max_brute_rank) + ", " +
           std::to_string(images_checked) + " Weyl images r <= " +
           std::to_string(o.max_weyl_image_rank);
  });
}

CriterionResult interval_partition_closed_form(const Options& o) {
  return run_criterion(6, "partition_q(interval root of height s) == q(1+q)^(s-1)",
                       [&](Tally& t) {
    for (int r = 1; r <= o.max_interval_partition_rank; ++r) {
      for (const auto& iv : all_intervals(r)) {
        auto value = kostant_q(r, interval_root(iv));
        t.expect(value == consecutive_closed_form(iv.height()),
                 where(iv) + ": got " + value.to_string());
      }
    }
    return "r <= " + std::to_string(o.max_interval_partition_rank);
  });
}

CriterionResult closed_terms_match_partition(const Options& o) {
  return run_criterion(7, "closed-form terms == partition_q DP on the alternation set",
                       [&](Tally& t) {
    for (int r = 1; r <= o.max_closed_term_rank; ++r) {
      const Weight top = highest_root(r);
      for (const auto& iv : all_intervals(r)) {
        const Weight mu = interval_root(iv);
        const auto set = alt_set_characterized(iv);
        for (const auto& sigma : set.elements()) {
          auto closed = closed_form_term(iv, sigma);
          auto dp = kostant_q(r, shifted_action(sigma, top) - mu);
          t.expect(closed == dp, where(iv) + " sigma=" + sigma.to_string() + ": closed " +
                                     closed.to_string() + ", DP " + dp.to_string());
        }
      }
    }
    return "r <= " + std::to_string(o.max_closed_term_rank);
  });
}

CriterionResult partition_oracle_equivalence(const Options& o) {
  return run_criterion(8, "partition_q DP == exhaustive oracle", [&](Tally& t) {
    auto compare = [&](int r, const Weight& xi) {
      auto dp = kostant_q(r, xi);
      auto oracle = kostant_q_oracle(r, xi);
      t.expect(dp == oracle, "xi=" + xi.to_string() + ": DP " + dp.to_string() + ", oracle " +
                                 oracle.to_string());
    };
    std::int64_t exhaustive = 0;
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c)
          for (int d = 0; d <= 2; ++d) {
            compare(4, Weight{a, b, c, d});
            ++exhaustive;
          }
    std::mt19937_64 rng(o.seed);
    for (int n = 0; n < o.random_weights; ++n) {
      std::vector<Coeff> coords(5);
      for (auto& c : coords) c = static_cast<Coeff>(rng() % 4);
      compare(5, Weight(std::move(coords)));
    }
    return std::to_string(exhaustive) + " exhaustive A_4 weights, " +
           std::to_string(o.random_weights) + " random A_5 weights (seed " +
           std::to_string(o.seed) + ")";
  });
}

CriterionResult combinatorial_identity(const Options& o) {
  return run_criterion(9, "sum_k C(n+1-k,k) == F_{n+2}; subset counts", [&](Tally& t) {
    for (int n = 0; n <= o.max_identity_n; ++n) {
      t.expect(fib_identity_check(n), "identity fails at n=" + std::to_string(n));
    }
    for (int n = 0; n <= o.max_subset_n; ++n) {
      const auto subsets = nonconsecutive_subsets(n);
      t.expect(static_cast<std::int64_t>(subsets.size()) == fibonacci(n + 2),
               "n=" + std::to_string(n) + ": " + std::to_string(subsets.size()) + " subsets");
      for (int k = 0; k <= n + 1; ++k) {
        std::int64_t direct = 0;
        for (const auto& s : subsets) direct += static_cast<int>(s.size()) == k;
        t.expect(direct == nonconsecutive_count_k(n, k),
                 "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": enumerated " +
                     std::to_string(direct));
      }
    }
    return "identity n <= " + std::to_string(o.max_identity_n) + ", subsets n <= " +
           std::to_string(o.max_subset_n);
  });
}

CriterionResult length_counts(const Options& o) {
  return run_criterion(10, "length counts and bounds match filtered alternation sets",
                       [&](Tally& t) {
    auto check = [&](const RootInterval& iv, BoundarySide side) {
      const int boundary = side == BoundarySide::Right ? iv.j() + 1 : iv.i() - 1;
      const auto set = alt_set_characterized(iv);
      for (bool contains : {false, true}) {
        // k = number of generators other than the boundary one.
        std::vector<std::int64_t> direct(static_cast<std::size_t>(iv.rank()) + 2, 0);
        for (const auto& sigma : set.elements()) {
          if (sigma.contains_generator(boundary) != contains) continue;
          direct[static_cast<std::size_t>(sigma.length() - (contains ? 1 : 0))] += 1;
        }
        int attained = 0;
        for (std::size_t k = 0; k < direct.size(); ++k) {
          const auto formula = count_by_length(iv, static_cast<int>(k), side, contains);
          t.expect(formula == direct[k], where(iv) + (contains ? " contains" : " avoids") +
                                             " k=" + std::to_string(k) + ": formula " +
                                             std::to_string(formula) + ", filtered " +
                                             std::to_string(direct[k]));
          if (direct[k] > 0) attained = static_cast<int>(k);
        }
        const int bound = max_length(iv, side, contains);
        t.expect(bound == attained, where(iv) + (contains ? " contains" : " avoids") +
                                        ": bound " + std::to_string(bound) + ", attained " +
                                        std::to_string(attained));
        for (int k = bound + 1; k <= iv.rank() + 1; ++k) {
          t.expect(count_by_length(iv, k, side, contains) == 0,
                   where(iv) + ": nonzero count above the bound at k=" + std::to_string(k));
        }
      }
    };
    for (int r = 2; r <= o.max_length_count_rank; ++r) {
      for (int j = 1; j <= r - 1; ++j) check(RootInterval(r, 1, j), BoundarySide::Right);
      for (int i = 2; i <= r; ++i) check(RootInterval(r, i, r), BoundarySide::Left);
    }
    return "one-sided intervals, r <= " + std::to_string(o.max_length_count_rank);
  });
}

CriterionResult zero_weight_exponents(const Options& o) {
  return run_criterion(11, "m_q(highest root, 0) == q + ... + q^r", [&](Tally& t) {
    for (int r = 1; r <= o.max_zero_weight_rank; ++r) {
      auto report = q_multiplicity(highest_root(r), Weight(r), Method::KwmfFull, o.brute_cap);
      t.expect(report.q_multiplicity == q_sum_one_to(r),
               "r=" + std::to_string(r) + ": got " + report.q_multiplicity.to_string());
    }
    return "r <= " + std::to_string(o.max_zero_weight_rank);
  });
}

std::vector<CriterionResult> run_all(const Options& options, const Progress& progress) {
  using Fn = CriterionResult (*)(const Options&);
  const Fn criteria[] = {
      alternation_set_equality,     fibonacci_cardinality,         q_multiplicity_kwmf,
      q_multiplicity_closed_forms,  multiplicity_one,              interval_partition_closed_form,
      closed_terms_match_partition, partition_oracle_equivalence, combinatorial_identity,
      length_counts,          zero_weight_exponents,
  };
  std::vector<CriterionResult> results;
  for (Fn fn : criteria) {
    results.push_back(fn(options));
    if (progress) progress(results.back());
  }
  return results;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS]" : "[FAIL]") << " #" << std::setw(2) << std::left << r.id << ' '
     << r.name << " (" << std::fixed << std::setprecision(2) << r.seconds << "s): " << r.detail;
  return os.str();
}

}  // namespace kostant::acceptance
