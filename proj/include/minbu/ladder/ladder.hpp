#pragma once

#include <string>
#include <vector>

#include "minbu/series/truncated_series.hpp"

namespace minbu {

enum class FamilyId { R, Q, F, H, r, q, f, h, g, e, p };

const char* family_name(FamilyId id);
FamilyId parse_family(const std::string& name);

// entries[l] for l = 0..l_max, all truncated at the common order
struct LadderFamily {
  FamilyId id = FamilyId::r;
  Variable variable = Variable::z;
  int l_max = 0;
  int order = 0;
  std::vector<TruncatedSeries> entries;

  const TruncatedSeries& operator[](int l) const;
  // coefficient of v^n in the l-th entry, i.e. [t^{l-1} v^n] of the hat view
  const BigRational& at(int l, int n) const { return (*this)[l][n]; }
};

struct MarkedFamilies {
  LadderFamily q, f, h;  // or Q, F, H on the general side
};

struct BalancedFamilies {
  LadderFamily g, e, p;
};

struct SubstitutionPair {
  TruncatedSeries z_of_g;
  TruncatedSeries g_of_z;
  int order = 0;
};

// r_0..r_{l_max} in z; recursion and closed form must coincide
LadderFamily compute_r_family(int l_max, int order);
// R_0..R_{l_max} in g; closed form cross-checked against the recursion
LadderFamily compute_R_family(int l_max, int order);

// r = 1 + z r^3 and R = 1 + 3 g R^2
TruncatedSeries bulk_r(int order);
TruncatedSeries bulk_R(int order);

// q_l = r_l - r_{l-1}, f_l = r_{l+1} - r_{l-1}, h_l = r_l f_l (likewise Q, F, H);
// the result has l_max = base.l_max - 1
MarkedFamilies derive_marked_families(const LadderFamily& base);

// triangular solves for g, e, p from q, f, h (z side only)
BalancedFamilies solve_balanced_families(const MarkedFamilies& marked);

// all z-side families at once: r up to l_max + 1, marked and balanced up to l_max
struct ZFamilies {
  LadderFamily r;
  MarkedFamilies marked;
  BalancedFamilies balanced;
};
ZFamilies compute_z_families(int l_max, int order);

SubstitutionPair build_substitution(int order);
// R_l = R1 r_l(z(g)), F_l = R1 f_l(z(g)), H_l = R1^2 h_l(z(g)), R1 = 1 + p1(z(g))
void verify_substitution(int l_max, int order);

// conservation laws of both ladders; throws VerificationFailure
void verify_conservation(const LadderFamily& base);

// h-hat = 1 + g-hat h-hat and f-hat = 1 + (e-hat - g-hat) + f-hat g-hat, entry by entry
void verify_convolution_reexpansion(const MarkedFamilies& marked, const BalancedFamilies& balanced);

struct SumRuleReport {
  int order = 0;
  std::vector<std::string> checks;  // names of the rules that held
};
SumRuleReport sum_rules(int order);

// rooted 2p-angulations with no multiple edges
TruncatedSeries twop_angulation_root_gf(int p, int order);

}  // namespace minbu
