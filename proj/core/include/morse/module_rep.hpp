#pragma once

#include <map>
#include <string>
#include <vector>

#include "morse/betamap.hpp"
#include "morse/colored_braid.hpp"
#include "morse/hecke.hpp"
#include "morse/partition.hpp"
#include "morse/ratmat.hpp"

namespace morse {

enum class CaseTag { I, II, III };

CaseTag case_parse(const std::string& s);
std::string case_str(CaseTag c);

// Matrix model of the Morse group attached to an orbit of type p, carrying
// the two commuting monodromy structures: the family action of B_n through
// generator matrices, and the microlocal action of the colored braid group
// through cached generator matrices.
//
// Cases I and III use the basis of BetaMaps with sigma_i acting by the
// permutation action; case II uses the induced Hecke module on the minimal
// coset representatives, sigma_i acting by left multiplication by T_{s_i}.
struct ModuleRep {
  CaseTag case_tag = CaseTag::I;
  Partition partition;
  std::vector<BetaMap> beta_basis;       // cases I/III
  std::vector<Permutation> coset_basis;  // case II
  int dim = 0;
  std::vector<RatMat> family;  // generator matrices for sigma_1..sigma_{n-1}
  std::map<std::string, RatMat> microlocal_cache;  // keyed by braid_str(word)
};

ModuleRep family_monodromy_rep(CaseTag tag, const Partition& p);

/// Matrix of an arbitrary braid word under the family action (negative
/// letters use exact inverses of the generator matrices).
RatMat family_matrix_of_word(const ModuleRep& rep, const BraidWord& w);

/// Microlocal matrix of a colored generator, case I/III: the signed
/// block-relabeling (phi (x) chi) o psi.
RatMat microlocal_rep_I(const Partition& p, const ColoredBraid& c);

/// Microlocal matrix of a colored generator, case II: right multiplication by
/// the Hecke image of obar(zeta(word)) on the induced-module basis.  The
/// descent of right multiplication to the quotient is re-proved by an exact
/// membership test; failure throws std::domain_error.
RatMat microlocal_rep_II(const Partition& p, const ColoredBraid& c);

/// Matrix of a colored braid word: generator matrices are cached and
/// composite words multiply the cached matrices in word order.
RatMat microlocal_matrix(ModuleRep& rep, const ColoredBraid& c);

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_passed() const;
  void add(const std::string& name, bool pass, const std::string& detail = "");
};

/// Braid relations and the per-case factorization identities among the family
/// matrices; commutation of every microlocal generator with every family
/// generator; colored-braid relations that hold among the supplied generator
/// words, tested as matrix identities.
VerifyReport verify_rep(ModuleRep& rep,
                        const std::vector<std::pair<std::string, ColoredBraid>>& gens);

/// Exact rank of the span of e_0 under repeated application of the family
/// generators (cyclic generation check).
int family_orbit_rank(const ModuleRep& rep);

}  // namespace morse
