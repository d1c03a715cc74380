#include "pathbasis/hbps.hpp"

#include <algorithm>
#include <future>

namespace pathbasis {

namespace {

// splitmix64 finalizer; decorrelates per-substructure seeds from tb.seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t r) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (r + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PerSubstructure run_substructure(const NetworkGraph& g, const SubstructurePath& p,
                                 const TieBreak& tb, int id) {
  TieBreak local = tb;
  if (tb.mode == TieBreakMode::Seeded) {
    local.seed = mix_seed(tb.seed, static_cast<std::uint64_t>(id));
  }
  InducedSubgraph sub = induced_subgraph(g, p);
  BasisPathSet basis = subroutine_basis(sub.graph, local);
  for (BasisPath& bp : basis.paths) {
    for (NodeRef& v : bp.path.nodes) {
      v.layer = sub.host_layer[static_cast<std::size_t>(v.layer)];
    }
    bp.substructure_id = id;
  }
  return PerSubstructure{p, sub.graph.edge_count(), sub.graph.hidden_node_count(),
                         std::move(basis)};
}

}  // namespace

std::variant<HbpsResult, RejectedSharedEdges> hbps(const NetworkGraph& g,
                                                   const TieBreak& tb, int jobs) {
  if (jobs < 1) throw Error("jobs must be >= 1");

  HbpsResult res;
  res.substructures = substructure_set(g);

  std::vector<SubstructurePath> chosen;
  for (std::size_t idx : res.substructures.independent) {
    chosen.push_back(res.substructures.all_paths[idx]);
  }
  if (auto shared = check_pairwise_edge_disjoint(chosen)) {
    return RejectedSharedEdges{*shared, chosen[shared->first],
                               chosen[shared->second]};
  }
  if (tb.mode == TieBreakMode::Explicit && chosen.size() > 1 &&
      (!tb.overrides.direct_extra.empty() || !tb.overrides.pstar.empty())) {
    throw InvalidOverride(
        "explicit overrides are only supported for single-substructure graphs");
  }

  res.per_substructure.resize(chosen.size());
  if (jobs == 1 || chosen.size() < 2) {
    for (std::size_t r = 0; r < chosen.size(); ++r) {
      res.per_substructure[r] =
          run_substructure(g, chosen[r], tb, static_cast<int>(r));
    }
  } else {
    // Purity of run_substructure makes scheduling irrelevant to the result;
    // batches of size `jobs` bound the number of concurrent workers.
    const std::size_t step = static_cast<std::size_t>(jobs);
    for (std::size_t start = 0; start < chosen.size(); start += step) {
      const std::size_t end = std::min(start + step, chosen.size());
      std::vector<std::future<PerSubstructure>> batch;
      for (std::size_t r = start; r < end; ++r) {
        batch.push_back(std::async(std::launch::async, run_substructure,
                                   std::cref(g), std::cref(chosen[r]),
                                   std::cref(tb), static_cast<int>(r)));
      }
      for (std::size_t r = start; r < end; ++r) {
        res.per_substructure[r] = batch[r - start].get();
      }
    }
  }

  for (const PerSubstructure& ps : res.per_substructure) {
    for (const BasisPath& bp : ps.basis.paths) res.basis.paths.push_back(bp);
  }
  std::sort(res.basis.paths.begin(), res.basis.paths.end(),
            [](const BasisPath& a, const BasisPath& b) {
              if (a.substructure_id != b.substructure_id) {
                return a.substructure_id < b.substructure_id;
              }
              if (a.origin != b.origin) {
                return a.origin == PathOrigin::Direct;
              }
              return a.path < b.path;
            });
  return res;
}

}  // namespace pathbasis
