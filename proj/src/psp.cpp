#include "rootspace/psp.hpp"

#include <unordered_map>

#include "rootspace/error.hpp"

namespace rootspace {

std::vector<Root> PspDecomposition::partial_sums() const {
  std::vector<Root> out;
  if (gammas.empty()) return out;
  Root s = Root::zero(gammas.front().size());
  for (const auto& g : gammas) {
    s += g;
    out.push_back(s);
  }
  return out;
}

namespace {

std::optional<Root> try_one_step(const Root& beta, const std::vector<Root>& unit, const RootSystem& rs) {
  for (const auto& g : unit) {
    if (!g.dominated_by(beta) || g == beta) continue;
    if (rs.contains_positive(beta - g)) return g;
  }
  return std::nullopt;
}

void require_positive_root(const Root& beta, NodeMask I, const RootSystem& rs) {
  if (!beta.is_positive() || !rs.contains_checked(beta))
    throw Error(ErrorKind::NotAPositiveRoot, "beta is not a positive root in the window");
  if (height(beta, I) <= 0) throw Error(ErrorKind::InvalidArgument, "ht_I(beta) must be positive");
}

class Searcher {
 public:
  Searcher(const std::vector<Root>& unit, const RootSystem& rs, NodeMask I) : unit_(unit), rs_(rs), I_(I) {}

  // Appends gammas (bottom first) for beta; false if impossible.
  bool solve(const Root& beta, std::vector<Root>& out) {
    if (height(beta, I_) == 1) {
      out.push_back(beta);
      return true;
    }
    if (auto it = dead_.find(beta); it != dead_.end()) return false;
    for (const auto& g : unit_) {
      if (!g.dominated_by(beta) || g == beta) continue;
      const Root rest = beta - g;
      if (!rs_.contains_positive(rest)) continue;
      const auto mark = out.size();
      if (solve(rest, out)) {
        out.push_back(g);
        return true;
      }
      out.resize(mark);
    }
    dead_.emplace(beta, true);
    return false;
  }

 private:
  const std::vector<Root>& unit_;
  const RootSystem& rs_;
  NodeMask I_;
  std::unordered_map<Root, bool, RootHash> dead_;
};

}  // namespace

Root one_step(const Root& beta, NodeMask I, const RootSystem& rs) {
  if (height(beta, I) <= 1) throw Error(ErrorKind::InvalidArgument, "one_step requires ht_I(beta) > 1");
  const auto unit = unit_I_height_set(rs, I);
  if (auto g = try_one_step(beta, unit, rs)) return *g;
  throw Error(ErrorKind::NoSingleStep, "no unit I-height root peels off");
}

PspDecomposition decompose(const Root& beta, NodeMask I, const RootSystem& rs, PspTelemetry* telemetry) {
  require_positive_root(beta, I, rs);
  const auto unit = unit_I_height_set(rs, I);
  PspDecomposition d{beta, I, {}};
  std::vector<Root> top;  // peeled from the top, last gamma first
  Root rest = beta;
  while (height(rest, I) > 1) {
    auto g = try_one_step(rest, unit, rs);
    if (!g) {
      if (rs.is_finite()) throw Error(ErrorKind::NoSingleStep, "one-step peel failed in finite type");
      if (telemetry) {
        ++telemetry->one_step_failures;
        ++telemetry->fallback_searches;
      }
      Searcher s(unit, rs, I);
      std::vector<Root> gammas;
      if (!s.solve(beta, gammas)) throw Error(ErrorKind::SearchExhausted, "no decomposition found");
      d.gammas = std::move(gammas);
      return d;
    }
    top.push_back(*g);
    rest -= *g;
  }
  d.gammas.push_back(rest);
  d.gammas.insert(d.gammas.end(), top.rbegin(), top.rend());
  return d;
}

PspVerdict verify(const PspDecomposition& d, const RootSystem& rs) {
  if (static_cast<int>(d.gammas.size()) != height(d.beta, d.I))
    return {false, -1, "length differs from ht_I(beta)"};
  for (std::size_t t = 0; t < d.gammas.size(); ++t) {
    const auto& g = d.gammas[t];
    if (height(g, d.I) != 1 || !g.is_positive() || !rs.contains(g))
      return {false, static_cast<int>(t), "gamma not in Delta_{I,1}"};
  }
  const auto sums = d.partial_sums();
  for (std::size_t t = 0; t < sums.size(); ++t)
    if (!sums[t].is_positive() || !rs.contains(sums[t]))
      return {false, static_cast<int>(t), "partial sum is not a positive root"};
  if (sums.empty() || sums.back() != d.beta) return {false, -1, "gammas do not sum to beta"};
  return {};
}

}  // namespace rootspace
