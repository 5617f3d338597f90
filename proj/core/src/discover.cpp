#include "cyclotrig/discover.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <stdexcept>

namespace cyclotrig {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

struct BlockResult {
  std::vector<Identity> found;  // enumeration order, locally deduplicated
  std::uint64_t scanned = 0;
  std::uint64_t passed = 0;
};

// All candidates sharing one denominator and one tan multiple.
BlockResult scan_block(const DiscoveryConfig& cfg, unsigned n, long a) {
  BlockResult out;
  const long sin_hi =
      cfg.sin_multiples.hi > 0 ? cfg.sin_multiples.hi : static_cast<long>(n) - 1;

  std::vector<long> sin_pool;
  std::vector<double> sin_val;
  for (long b = cfg.sin_multiples.lo; b <= sin_hi; ++b) {
    if (b % static_cast<long>(n) == 0) continue;  // sin vanishes
    sin_pool.push_back(b);
    sin_val.push_back(std::sin(M_PI * static_cast<double>(b) / n));
  }
  const double tan_val = std::tan(M_PI * static_cast<double>(a) / n);

  std::vector<double> surd_val;
  for (unsigned m : cfg.surd_candidates)
    surd_val.push_back(std::sqrt(static_cast<double>(m)));

  std::vector<size_t> chosen;   // indices into sin_pool
  std::vector<size_t> coeffs;   // indices into cfg.coeff_set

  auto try_candidate = [&](double sin_sum) {
    for (size_t mi = 0; mi < cfg.surd_candidates.size(); ++mi) {
      for (const Rational& q : cfg.q_candidates) {
        ++out.scanned;
        double rhs = q.to_double() * surd_val[mi];
        if (std::abs(tan_val + sin_sum - rhs) >= cfg.prefilter_tol) continue;
        ++out.passed;
        Identity id;
        id.lhs.push_back({Rational(1), TrigKind::Tan, a, n});
        for (size_t j = 0; j < chosen.size(); ++j)
          id.lhs.push_back({cfg.coeff_set[coeffs[j]], TrigKind::Sin,
                            sin_pool[chosen[j]], n});
        id.rhs = {q, cfg.surd_candidates[mi]};
        if (verify(id).holds) out.found.push_back(normalize_identity(id));
      }
    }
  };

  // Ascending sin-multiple subsets of size <= max_sin_terms, with every
  // assignment of coefficients from the configured set.
  auto recurse = [&](auto&& self, size_t next, double sin_sum) -> void {
    try_candidate(sin_sum);
    if (chosen.size() >= cfg.max_sin_terms) return;
    for (size_t p = next; p < sin_pool.size(); ++p) {
      chosen.push_back(p);
      for (size_t c = 0; c < cfg.coeff_set.size(); ++c) {
        coeffs.push_back(c);
        self(self, p + 1,
             sin_sum + cfg.coeff_set[c].to_double() * sin_val[p]);
        coeffs.pop_back();
      }
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, 0.0);
  return out;
}

}  // namespace

DiscoveryReport discover(const DiscoveryConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (cfg.max_sin_terms > 4)
    throw std::invalid_argument("max_sin_terms above desk scale (4)");
  for (unsigned n : cfg.denominators) {
    if (n == 0 || n % 2 == 0)
      throw std::invalid_argument("denominators must be odd");
    if (n > cfg.max_denominator)
      throw std::invalid_argument("denominator above the configured bound");
  }
  for (unsigned m : cfg.surd_candidates)
    if (m % 2 == 0 || !is_squarefree(m))
      throw std::invalid_argument("surd candidates must be odd squarefree");

  std::vector<std::future<BlockResult>> blocks;
  for (unsigned n : cfg.denominators) {
    const long tan_hi =
        cfg.tan_multiples.hi > 0 ? cfg.tan_multiples.hi : static_cast<long>(n) - 1;
    for (long a = cfg.tan_multiples.lo; a <= tan_hi; ++a) {
      if (a % static_cast<long>(n) == 0) continue;  // no tan term
      blocks.push_back(std::async(std::launch::async, scan_block,
                                  std::cref(cfg), n, a));
    }
  }

  DiscoveryReport report;
  std::set<std::string> seen;
  for (auto& fut : blocks) {
    BlockResult block = fut.get();
    report.candidates_scanned += block.scanned;
    report.prefilter_pass += block.passed;
    for (auto& id : block.found) {
      std::string key = render(id);
      if (seen.insert(std::move(key)).second)
        report.found.push_back(std::move(id));
    }
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::vector<Identity> residue_construct(unsigned n) {
  if (!is_prime(n) || n % 4 != 3)
    throw std::invalid_argument("residue_construct needs a prime n = 3 mod 4");

  const CycloElem target_base = gauss_sum(n);  // equals i sqrt(n)
  const unsigned half = (n - 1) / 2;
  std::vector<CycloElem> four_i_sin;
  for (unsigned b = 1; b <= half; ++b)
    four_i_sin.push_back(Rational(4) * i_sin_embed(b, n));

  std::vector<Identity> out;
  std::set<std::string> seen;
  std::vector<int> signs(half, 0);  // -1, 0, +1 per sin multiple

  for (unsigned k = 1; k < n; ++k) {
    const CycloElem target = target_base - i_tan_embed(k, n);
    auto dfs = [&](auto&& self, unsigned b, const CycloElem& acc) -> void {
      if (b == half) {
        if (!(acc == target)) return;
        Identity id;
        id.lhs.push_back({Rational(1), TrigKind::Tan, static_cast<long>(k), n});
        for (unsigned j = 0; j < half; ++j)
          if (signs[j] != 0)
            id.lhs.push_back({Rational(4 * signs[j]), TrigKind::Sin,
                              static_cast<long>(j + 1), n});
        id.rhs = {Rational(1), n};
        if (verify(id).holds) {
          Identity norm = normalize_identity(id);
          if (seen.insert(render(norm)).second) out.push_back(std::move(norm));
        }
        return;
      }
      signs[b] = 0;
      self(self, b + 1, acc);
      signs[b] = 1;
      self(self, b + 1, acc + four_i_sin[b]);
      signs[b] = -1;
      self(self, b + 1, acc - four_i_sin[b]);
      signs[b] = 0;
    };
    dfs(dfs, 0, CycloElem::zero(n));
  }
  return out;
}

}  // namespace cyclotrig
