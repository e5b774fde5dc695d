#include "cplkit/frame_gen.hpp"

#include <algorithm>
#include <random>

namespace cplkit {

std::vector<std::string> standard_world_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(std::string(1, char('a' + i)));
  return out;
}

std::vector<std::vector<Mask>> upward_closed_families(int n) {
  if (n < 0 || n > kMaxEnumerationWorlds + 1) {
    fail(ErrorCode::SizeCapExceeded, "family enumeration capped at " +
                                         std::to_string(kMaxEnumerationWorlds + 1) +
                                         " worlds");
  }
  Mask full = n == 0 ? 0 : (Mask(1) << n) - 1;
  int subsets = 1 << n;
  std::vector<std::vector<Mask>> out;
  // families are subsets of the powerset: bit u of the candidate encodes
  // membership of the subset with mask u
  for (std::uint64_t candidate = 0; candidate < (std::uint64_t(1) << subsets); ++candidate) {
    bool closed = true;
    for (int u = 0; u < subsets && closed; ++u) {
      if (!(candidate & (std::uint64_t(1) << u))) continue;
      Mask rest = full & ~Mask(u);
      for (Mask pad = rest; pad != 0; pad = (pad - 1) & rest) {
        if (!(candidate & (std::uint64_t(1) << (Mask(u) | pad)))) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<Mask> family;
    for (int u = 0; u < subsets; ++u) {
      if (candidate & (std::uint64_t(1) << u)) family.push_back(Mask(u));
    }
    out.push_back(std::move(family));
  }
  return out;
}

std::vector<NeighborhoodFrame> enumerate_monotonic_frames(int n) {
  if (n < 1 || n > kMaxEnumerationWorlds) {
    fail(ErrorCode::SizeCapExceeded, "frame enumeration capped at " +
                                         std::to_string(kMaxEnumerationWorlds) + " worlds");
  }
  std::vector<std::vector<Mask>> families = upward_closed_families(n);
  std::vector<std::string> labels = standard_world_labels(n);
  std::vector<NeighborhoodFrame> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<std::vector<Mask>> chosen;
    for (int w = 0; w < n; ++w) chosen.push_back(families[pick[w]]);
    out.push_back(NeighborhoodFrame::from_masks(labels, std::move(chosen)));
    int w = n - 1;
    while (w >= 0) {
      if (++pick[w] < families.size()) break;
      pick[w] = 0;
      --w;
    }
    if (w < 0) break;
  }
  return out;
}

namespace {

std::vector<Mask> upward_close(const std::vector<Mask>& generators, Mask full) {
  std::vector<bool> member(std::size_t(full) + 1, false);
  for (Mask g : generators) {
    Mask rest = full & ~g;
    for (Mask pad = rest;; pad = (pad - 1) & rest) {
      member[g | pad] = true;
      if (pad == 0) break;
    }
  }
  std::vector<Mask> out;
  for (Mask m = 0; m <= full; ++m) {
    if (member[m]) out.push_back(m);
  }
  return out;
}

std::vector<Mask> intersection_close(std::vector<Mask> generators) {
  // close the generator set under pairwise intersection; the upward closure
  // of the result is then intersection-closed as well
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> add;
    for (Mask a : generators) {
      for (Mask b : generators) {
        Mask c = a & b;
        if (!std::binary_search(generators.begin(), generators.end(), c)) add.push_back(c);
      }
    }
    if (!add.empty()) {
      grew = true;
      generators.insert(generators.end(), add.begin(), add.end());
      std::sort(generators.begin(), generators.end());
      generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    }
  }
  return generators;
}

}  // namespace

NeighborhoodFrame random_monotonic_frame(int n, std::uint64_t seed,
                                         std::optional<FrameClass> target) {
  if (n < 1 || n > kMaxWorlds) {
    fail(ErrorCode::SizeCapExceeded, "random frame size must be between 1 and " +
                                         std::to_string(kMaxWorlds));
  }
  // raw engine output only: std::uniform_int_distribution is not pinned down
  // by the standard, mt19937_64 is, and golden outputs must not drift
  std::mt19937_64 rng(seed);
  Mask full = (Mask(1) << n) - 1;

  FrameClass cls = target.value_or(FrameClass::Monotonic);
  std::vector<std::vector<Mask>> families;
  for (int w = 0; w < n; ++w) {
    int k = static_cast<int>(rng() % 3);
    std::vector<Mask> generators;
    for (int i = 0; i < k; ++i) generators.push_back(static_cast<Mask>(rng() % (std::uint64_t(full) + 1)));

    switch (cls) {
      case FrameClass::Monotonic:
        break;
      case FrameClass::QuasiFilter:
        generators = intersection_close(std::move(generators));
        break;
      case FrameClass::Filter:
        if (generators.empty()) generators.push_back(full);
        generators = intersection_close(std::move(generators));
        break;
      case FrameClass::AugmentedQuasiFilter:
        if (!generators.empty()) {
          Mask core = full;
          for (Mask g : generators) core &= g;
          generators = {core};
        }
        break;
      case FrameClass::AugmentedFilter: {
        Mask core = full;
        for (Mask g : generators) core &= g;
        generators = {core};
        break;
      }
    }
    families.push_back(upward_close(generators, full));
  }

  NeighborhoodFrame f =
      NeighborhoodFrame::from_masks(standard_world_labels(n), std::move(families));
  if (target && !classify(f).count(*target)) {
    fail(ErrorCode::UsageError, "internal: repair missed target class");
  }
  return f;
}

std::vector<FiniteTopology> enumerate_topologies(int n) {
  if (n < 1 || n > kMaxEnumerationWorlds) {
    fail(ErrorCode::SizeCapExceeded,
         "topology enumeration supports 1 to " + std::to_string(kMaxEnumerationWorlds) +
             " points, got " + std::to_string(n));
  }
  Mask full = (Mask(1) << n) - 1;
  std::vector<Mask> middles;
  for (Mask m = 1; m < full; ++m) middles.push_back(m);

  std::vector<FiniteTopology> out;
  for (Mask pick = 0; pick < (Mask(1) << middles.size()); ++pick) {
    std::vector<Mask> opens{0};
    for (std::size_t i = 0; i < middles.size(); ++i) {
      if ((pick >> i) & 1) opens.push_back(middles[i]);
    }
    opens.push_back(full);
    bool closed = true;
    for (std::size_t i = 0; i < opens.size() && closed; ++i) {
      for (std::size_t j = i + 1; j < opens.size() && closed; ++j) {
        closed = std::binary_search(opens.begin(), opens.end(), opens[i] | opens[j]) &&
                 std::binary_search(opens.begin(), opens.end(), opens[i] & opens[j]);
      }
    }
    if (closed) out.push_back(FiniteTopology::from_masks(standard_world_labels(n), opens));
  }
  return out;
}

}  // namespace cplkit
