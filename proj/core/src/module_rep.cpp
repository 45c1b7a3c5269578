#include "morse/module_rep.hpp"

#include <algorithm>
#include <stdexcept>

namespace morse {

CaseTag case_parse(const std::string& s) {
  if (s == "I" || s == "i") return CaseTag::I;
  if (s == "II" || s == "ii") return CaseTag::II;
  if (s == "III" || s == "iii") return CaseTag::III;
  throw std::invalid_argument("unknown case tag: " + s);
}

std::string case_str(CaseTag c) {
  switch (c) {
    case CaseTag::I: return "I";
    case CaseTag::II: return "II";
    case CaseTag::III: return "III";
  }
  return "?";
}

ModuleRep family_monodromy_rep(CaseTag tag, const Partition& p) {
  ModuleRep rep;
  rep.case_tag = tag;
  rep.partition = p;
  int n = p.n();

  if (tag == CaseTag::I || tag == CaseTag::III) {
    rep.beta_basis = enumerate_beta(p);
    rep.dim = static_cast<int>(rep.beta_basis.size());
    for (int a = 0; a + 1 < n; ++a) {
      Permutation s = Permutation::adjacent_transposition(n, a);
      RatMat m(rep.dim, rep.dim);
      for (int j = 0; j < rep.dim; ++j) {
        BetaMap image = sigma_action_on_beta(s, rep.beta_basis[j]);
        m(beta_index(rep.beta_basis, image), j) = 1;
      }
      rep.family.push_back(std::move(m));
    }
  } else {
    rep.coset_basis = min_coset_reps(p);
    rep.dim = static_cast<int>(rep.coset_basis.size());
    for (int a = 0; a + 1 < n; ++a) {
      RatMat m(rep.dim, rep.dim);
      for (int j = 0; j < rep.dim; ++j) {
        HeckeElement x = hecke_gen_mult_left(a, HeckeElement::basis(rep.coset_basis[j]));
        std::vector<Rat> col = reduce_mod_parabolic(x, p);
        for (int i = 0; i < rep.dim; ++i) m(i, j) = col[i];
      }
      rep.family.push_back(std::move(m));
    }
  }
  return rep;
}

RatMat family_matrix_of_word(const ModuleRep& rep, const BraidWord& w) {
  if (w.strands != rep.partition.n())
    throw std::invalid_argument("braid word strand count does not match the module");
  RatMat acc = RatMat::identity(rep.dim);
  for (int l : w.letters) {
    int a = (l > 0 ? l : -l) - 1;
    const RatMat& g = rep.family[a];
    acc = (l > 0) ? acc * g : acc * g.inverse();
  }
  return acc;
}

RatMat microlocal_rep_I(const Partition& p, const ColoredBraid& c) {
  std::vector<Permutation> psi = color_projection_psi(c);  // validates colors
  int sign = chi_sign(p, psi);
  Permutation g = strand_permutation(c.word);  // block relabeling in S_k
  std::vector<BetaMap> betas = enumerate_beta(p);
  RatMat m(static_cast<int>(betas.size()), static_cast<int>(betas.size()));
  for (size_t j = 0; j < betas.size(); ++j) {
    BetaMap image = relabel_blocks(g, betas[j]);
    m(beta_index(betas, image), static_cast<int>(j)) = sign;
  }
  return m;
}

RatMat microlocal_rep_II(const Partition& p, const ColoredBraid& c) {
  if (!preserves_colors(c))
    throw std::invalid_argument("braid word does not preserve colors (not in B_nbar)");
  HeckeElement r = braid_to_hecke(invert_gens_obar(cabling_zeta(p, c.word)));

  // Right multiplication by r descends to the induced module iff
  // (T_t - T_e) r stays in the span of {T_v (T_t' - T_e)} for every
  // Young-subgroup simple generator t.
  std::vector<int> young = p.young_generators();
  if (!young.empty()) {
    RowSpace kernel = parabolic_kernel_span(p);
    std::vector<Permutation> full = all_permutations(p.n());
    for (int t : young) {
      HeckeElement left = hecke_gen_mult_left(t, r) - r;
      if (!kernel.contains(hecke_to_vector(left, full)))
        throw std::domain_error("right multiplication does not descend for word '" +
                                braid_str(c.word) + "'");
    }
  }

  std::vector<Permutation> reps = min_coset_reps(p);
  RatMat m(static_cast<int>(reps.size()), static_cast<int>(reps.size()));
  for (size_t j = 0; j < reps.size(); ++j) {
    HeckeElement prod = hecke_multiply(HeckeElement::basis(reps[j]), r);
    std::vector<Rat> col = reduce_mod_parabolic(prod, p);
    for (size_t i = 0; i < reps.size(); ++i) m(static_cast<int>(i), static_cast<int>(j)) = col[i];
  }
  return m;
}

namespace {
RatMat microlocal_generator_matrix(const ModuleRep& rep, const ColoredBraid& gen) {
  return rep.case_tag == CaseTag::II ? microlocal_rep_II(rep.partition, gen)
                                     : microlocal_rep_I(rep.partition, gen);
}
}  // namespace

RatMat microlocal_matrix(ModuleRep& rep, const ColoredBraid& c) {
  if (!(c.partition == rep.partition))
    throw std::invalid_argument("colored braid partition does not match the module");
  RatMat acc = RatMat::identity(rep.dim);
  for (int l : c.word.letters) {
    int i = l > 0 ? l : -l;
    ColoredBraid gen(rep.partition, BraidWord(rep.partition.k(), {i}));
    std::string key = braid_str(gen.word);
    auto it = rep.microlocal_cache.find(key);
    if (it == rep.microlocal_cache.end())
      it = rep.microlocal_cache.emplace(key, microlocal_generator_matrix(rep, gen)).first;
    acc = (l > 0) ? acc * it->second : acc * it->second.inverse();
  }
  return acc;
}

bool VerifyReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void VerifyReport::add(const std::string& name, bool pass, const std::string& detail) {
  checks.push_back({name, pass, detail});
}

namespace {
// The membership condition (T_t - 1) r in the kernel span, reported instead
// of thrown.
bool descent_ok(const Partition& p, const ColoredBraid& c, std::string& detail) {
  HeckeElement r = braid_to_hecke(invert_gens_obar(cabling_zeta(p, c.word)));
  std::vector<int> young = p.young_generators();
  if (young.empty()) return true;
  RowSpace kernel = parabolic_kernel_span(p);
  std::vector<Permutation> full = all_permutations(p.n());
  for (int t : young) {
    HeckeElement left = hecke_gen_mult_left(t, r) - r;
    if (!kernel.contains(hecke_to_vector(left, full))) {
      detail = "descent fails at Young generator s_" + std::to_string(t + 1);
      return false;
    }
  }
  return true;
}
}  // namespace

VerifyReport verify_rep(ModuleRep& rep,
                        const std::vector<std::pair<std::string, ColoredBraid>>& gens) {
  VerifyReport report;
  const int ng = static_cast<int>(rep.family.size());

  for (int a = 0; a < ng; ++a)
    for (int b = a + 1; b < ng; ++b) {
      const RatMat &A = rep.family[a], &B = rep.family[b];
      bool ok = (b == a + 1) ? (A * B * A == B * A * B) : (A * B == B * A);
      report.add("family braid relation sigma_" + std::to_string(a + 1) + ", sigma_" +
                     std::to_string(b + 1),
                 ok);
    }

  RatMat id = RatMat::identity(rep.dim);
  for (int a = 0; a < ng; ++a) {
    const RatMat& M = rep.family[a];
    if (rep.case_tag == CaseTag::II) {
      RatMat u = M - id;
      report.add("family factorization (M - I)^2 = 0, sigma_" + std::to_string(a + 1),
                 (u * u).is_zero());
    } else {
      report.add("family factorization M^2 = I, sigma_" + std::to_string(a + 1),
                 (M * M).is_identity());
    }
  }

  std::vector<RatMat> micro;
  std::vector<char> usable;
  for (const auto& [name, gen] : gens) {
    if (rep.case_tag == CaseTag::II) {
      std::string detail;
      bool ok = descent_ok(rep.partition, gen, detail);
      report.add("eta well-defined for " + name, ok, detail);
      if (!ok) {
        micro.push_back(RatMat::identity(rep.dim));  // placeholder, keeps indices aligned
        usable.push_back(0);
        continue;
      }
    }
    micro.push_back(microlocal_matrix(rep, gen));
    usable.push_back(1);
  }

  for (size_t g = 0; g < gens.size(); ++g) {
    if (!usable[g]) continue;
    for (int a = 0; a < ng; ++a)
      report.add("[" + gens[g].first + ", sigma_" + std::to_string(a + 1) + "] = 0",
                 micro[g] * rep.family[a] == rep.family[a] * micro[g]);
  }

  // Colored-braid relations that hold among the supplied generator words:
  // braid relations for adjacent same-color kappas, commutation for
  // generators whose kappa-index supports are at distance >= 2.
  auto support = [](const ColoredBraid& c) {
    int lo = 1 << 30, hi = -1;
    for (int l : c.word.letters) {
      int i = l > 0 ? l : -l;
      lo = std::min(lo, i);
      hi = std::max(hi, i);
    }
    return std::pair<int, int>(lo, hi);
  };
  for (size_t g = 0; g < gens.size(); ++g)
    for (size_t h = g + 1; h < gens.size(); ++h) {
      if (!usable[g] || !usable[h]) continue;
      auto [glo, ghi] = support(gens[g].second);
      auto [hlo, hhi] = support(gens[h].second);
      bool disjoint = (ghi + 2 <= hlo) || (hhi + 2 <= glo);
      bool both_kappa = gens[g].second.word.length() == 1 && gens[h].second.word.length() == 1;
      if (disjoint) {
        report.add("commuting words " + gens[g].first + ", " + gens[h].first,
                   micro[g] * micro[h] == micro[h] * micro[g]);
      } else if (both_kappa && (ghi + 1 == hlo || hhi + 1 == glo)) {
        const RatMat &A = micro[g], &B = micro[h];
        report.add("braid relation " + gens[g].first + ", " + gens[h].first,
                   A * B * A == B * A * B);
      }
    }

  return report;
}

int family_orbit_rank(const ModuleRep& rep) {
  RowSpace span(rep.dim);
  std::vector<Rat> e0(rep.dim, Rat(0));
  e0[0] = 1;
  span.add(e0);
  std::vector<std::vector<Rat>> frontier{e0};
  while (!frontier.empty()) {
    std::vector<std::vector<Rat>> next;
    for (const auto& v : frontier) {
      for (const RatMat& g : rep.family) {
        std::vector<Rat> w(rep.dim, Rat(0));
        for (int k = 0; k < rep.dim; ++k) {
          if (is_zero(v[k])) continue;
          for (int i = 0; i < rep.dim; ++i) {
            const Rat& a = g(i, k);
            if (!is_zero(a)) w[i] += a * v[k];
          }
        }
        int before = span.rank();
        span.add(w);
        if (span.rank() > before) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return span.rank();
}

}  // namespace morse
