#include "sparsegroup/verify.hpp"

#include <algorithm>
#include <functional>

#include "sparsegroup/ideals.hpp"
#include "sparsegroup/io.hpp"
#include "sparsegroup/kappa.hpp"
#include "sparsegroup/leaps.hpp"

namespace sparsegroup {
namespace {

std::string describe(const NumericalSemigroup& h) { return "gaps {" + format_gap_line(h) + "}"; }

std::string describe(const NumericalSemigroup& h, Int kappa) {
  return describe(h) + ", kappa = " + std::to_string(kappa);
}

class Recorder {
 public:
  Recorder(std::string name, std::string statement) {
    check_.name = std::move(name);
    check_.statement = std::move(statement);
  }

  void expect(bool holds, const std::function<std::string()>& witness) {
    ++check_.instances;
    if (!holds && !check_.counterexample) check_.counterexample = witness();
  }

  TheoremCheck done() { return std::move(check_); }

 private:
  TheoremCheck check_;
};

}  // namespace

std::vector<TheoremCheck> verify_theorems(const VerifyOptions& options) {
  if (options.max_genus < 0 || options.max_genus > options.genus_cap) {
    throw SemigroupError(ErrorCode::InvalidParameters,
                         "max genus " + std::to_string(options.max_genus) + " outside [0, " +
                             std::to_string(options.genus_cap) + "]");
  }
  std::vector<NumericalSemigroup> all;
  walk_tree(options.max_genus, [&](const NumericalSemigroup& h) { all.push_back(h); });

  std::vector<TheoremCheck> results;

  {
    Recorder r("arf-equivalence",
               "triple Arf condition = doubled condition = every H(n_k) stable");
    for (const auto& h : all) {
      const bool definition = is_arf_definition(h);
      r.expect(definition == is_arf_double(h) && definition == is_arf_stable(h),
               [&] { return describe(h); });
    }
    results.push_back(r.done());
  }

  {
    Recorder r("hyperelliptic-leaps",
               "sum v_m = g; hyperelliptic iff v_1 = 0, then v_2 = g; otherwise v_{g+m} = 0");
    for (const auto& h : all) {
      const auto p = leap_profile(h);
      const Int g = h.genus();
      bool holds = p.total() == g;
      if (g > 0) {
        const bool hyper = is_hyperelliptic(h);
        holds = holds && hyper == (p.count(1) == 0);
        if (hyper) holds = holds && p == LeapProfile({{2, g}});
        if (!hyper) holds = holds && p.max_size() <= g;
      }
      r.expect(holds, [&] { return describe(h); });
    }
    results.push_back(r.done());
  }

  {
    Recorder r("ordinary-leaps",
               "v_2 = 0 iff N_0; v_2 != 0 iff 1 not in H; N_g iff (v_1, v_2) = (g - 1, 1)");
    for (const auto& h : all) {
      const auto p = leap_profile(h);
      const Int g = h.genus();
      bool holds = (p.count(2) == 0) == (g == 0) && (p.count(2) != 0) == !h.contains(1);
      if (g > 0) {
        const bool ordinary = h == NumericalSemigroup::ordinary(g);
        const bool counts = p.count(1) == g - 1 && p.count(2) == 1;
        holds = holds && ordinary == counts && (!ordinary || p.max_size() <= 2);
      }
      r.expect(holds, [&] { return describe(h); });
    }
    results.push_back(r.done());
  }

  {
    Recorder r("sparse-leaps",
               "sparse iff v_1 + v_2 = g; then l_g = v_1 + 2 v_2 - 1; with K = 2g - l_g, "
               "sparse iff v_1 = K - 1 and v_2 = g - K + 1");
    for (const auto& h : all) {
      const auto p = leap_profile(h);
      const Int g = h.genus();
      const bool sparse = is_sparse(h);
      bool holds = sparse == (p.count(1) + p.count(2) == g);
      if (sparse) holds = holds && h.frobenius() == p.count(1) + 2 * p.count(2) - 1;
      if (g > 0) {
        const Int defect = 2 * g - h.frobenius();
        holds = holds && defect >= 1 &&
                sparse == (p.count(1) == defect - 1 && p.count(2) == g - defect + 1);
      }
      r.expect(holds, [&] { return describe(h); });
    }
    results.push_back(r.done());
  }

  {
    Recorder r("kappa-equivalence",
               "profile, leap size, non-gap spacing and run criteria agree for 2 <= kappa <= g + 2");
    for (const auto& h : all) {
      if (h.genus() == 0) continue;
      for (Int kappa = 2; kappa <= h.genus() + 2; ++kappa) {
        r.expect(kappa_checks(h, kappa).agree(), [&] { return describe(h, kappa); });
      }
    }
    results.push_back(r.done());
  }

  {
    Recorder r("pure-run-criterion",
               "for kappa >= 3: pure iff kappa-sparse with a run of kappa - 1 members below c");
    for (const auto& h : all) {
      for (Int kappa = 3; kappa <= h.genus() + 2; ++kappa) {
        const LeapProfile p = leap_profile(h);
        const bool pure = p.total_up_to(kappa) == h.genus() && p.count(kappa) != 0;
        r.expect(pure == is_pure_kappa_sparse_run(h, kappa), [&] { return describe(h, kappa); });
      }
    }
    results.push_back(r.done());
  }

  {
    Recorder r("frobenius-from-leaps",
               "l_g = sum m v_m - 1; kappa-sparse iff both weighted leap identities hold");
    for (const auto& h : all) {
      r.expect(frobenius_from_profile(leap_profile(h)) == h.frobenius(),
               [&] { return describe(h); });
      if (h.genus() == 0) continue;
      for (Int kappa = 2; kappa <= h.genus() + 2; ++kappa) {
        r.expect(frobenius_identity_check(h, kappa) == is_kappa_sparse(h, kappa),
                 [&] { return describe(h, kappa); });
      }
    }
    results.push_back(r.done());
  }

  {
    Recorder r("pure-partition",
               "kappa-sparse classes form an ascending chain; H is pure for exactly one kappa, "
               "its sparseness index");
    for (const auto& h : all) {
      const Int top = h.genus() + 2;
      Int pure_count = 0;
      Int pure_kappa = 0;
      bool chain = true;
      for (Int kappa = 1; kappa <= top; ++kappa) {
        if (is_pure_kappa_sparse(h, kappa)) {
          ++pure_count;
          pure_kappa = kappa;
        }
        if (is_kappa_sparse(h, kappa) && !is_kappa_sparse(h, kappa + 1)) chain = false;
      }
      r.expect(chain && pure_count == 1 && pure_kappa == sparseness_index(h),
               [&] { return describe(h); });
    }
    results.push_back(r.done());
  }

  {
    Recorder r("intersection-closure", "H1, H2 kappa-sparse implies H1 n H2 kappa-sparse");
    const Int pair_genus = std::min(options.pair_genus, options.max_genus);
    std::vector<const NumericalSemigroup*> small;
    for (const auto& h : all) {
      if (h.genus() <= pair_genus) small.push_back(&h);
    }
    for (const auto* a : small) {
      for (const auto* b : small) {
        const NumericalSemigroup meet = intersect(*a, *b);
        for (Int kappa = 2; kappa <= pair_genus + 2; ++kappa) {
          if (!is_kappa_sparse(*a, kappa) || !is_kappa_sparse(*b, kappa)) continue;
          r.expect(is_kappa_sparse(meet, kappa), [&] {
            return describe(*a) + " n " + describe(*b) + ", kappa = " + std::to_string(kappa);
          });
        }
      }
    }
    results.push_back(r.done());
  }

  {
    Recorder r("frobenius-adjoin-closure",
               "H kappa-sparse of genus > 0 implies H u {l_g} kappa-sparse");
    for (const auto& h : all) {
      if (h.genus() == 0) continue;
      const NumericalSemigroup parent = adjoin_frobenius(h);
      for (Int kappa = 2; kappa <= h.genus() + 2; ++kappa) {
        if (!is_kappa_sparse(h, kappa)) continue;
        r.expect(is_kappa_sparse(parent, kappa), [&] { return describe(h, kappa); });
      }
    }
    results.push_back(r.done());
  }

  return results;
}

}  // namespace sparsegroup
