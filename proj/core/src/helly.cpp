#include "leraytk/helly.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <optional>
#include <utility>

#include "leraytk/errors.hpp"
#include "leraytk/leray.hpp"
#include "leraytk/random.hpp"

namespace leraytk {
namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaxNerveMembers = 63;

Mask bit(std::size_t i) { return Mask{1} << i; }

Simplex mask_to_simplex(Mask mask) {
  std::vector<VertexId> v;
  while (mask != 0) {
    v.push_back(static_cast<VertexId>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return Simplex::from_sorted(std::move(v));
}

// meet(nullptr, i) is member i itself; meet(&s, i) intersects s with member
// i. Both return nullopt for an empty result.
struct BoxMeet {
  const BoxFamily* family;
  std::optional<Box> operator()(const Box* s, std::size_t i) const {
    const Box& b = family->members[i];
    Box out = s == nullptr ? b : s->intersected_with(b);
    if (out.empty()) return std::nullopt;
    return out;
  }
};

struct AtomMeet {
  const AtomFamily* family;
  std::optional<std::vector<std::size_t>> operator()(const std::vector<std::size_t>* s,
                                                     std::size_t i) const {
    const auto& m = family->members[i];
    std::vector<std::size_t> out;
    if (s == nullptr) {
      out = m;
    } else {
      std::set_intersection(s->begin(), s->end(), m.begin(), m.end(), std::back_inserter(out));
    }
    if (out.empty()) return std::nullopt;
    return out;
  }
};

// State: the nonempty boxes F_{1 j_1} ∩ ... over all piece choices.
struct ChoiceMeet {
  const FrFamily* family;
  std::optional<std::vector<Box>> operator()(const std::vector<Box>* s, std::size_t i) const {
    std::vector<Box> out;
    for (std::size_t piece : family->groups[i]) {
      const Box& b = family->pieces.members[piece];
      if (s == nullptr) {
        if (!b.empty()) out.push_back(b);
        continue;
      }
      for (const Box& c : *s) {
        Box x = c.intersected_with(b);
        if (!x.empty()) out.push_back(std::move(x));
      }
    }
    if (out.empty()) return std::nullopt;
    return out;
  }
};

template <class State, class Meet, class Visit>
void walk_faces(std::size_t n, std::size_t start, Mask mask, const State* state, const Meet& meet,
                const Visit& visit) {
  visit(mask, state);
  for (std::size_t i = start; i < n; ++i) {
    if (auto next = meet(state, i)) walk_faces(n, i + 1, mask | bit(i), &*next, meet, visit);
  }
}

template <class State, class Meet>
std::vector<Mask> face_masks(std::size_t n, const Meet& meet) {
  if (n > kMaxNerveMembers) throw InvalidArgument("nerve supports at most 63 members");
  std::vector<Mask> faces;
  walk_faces<State>(n, 0, 0, nullptr, meet, [&](Mask mask, const State*) {
    if (faces.size() >= kDefaultSimplexGuard) throw GuardExceeded("nerve exceeds simplex guard");
    faces.push_back(mask);
  });
  return faces;
}

SimplicialComplex nerve_from_masks(std::size_t n, const std::vector<Mask>& faces,
                                   const std::vector<std::string>& names) {
  std::vector<Simplex> closed;
  closed.reserve(faces.size());
  for (Mask m : faces) closed.push_back(mask_to_simplex(m));
  auto x = SimplicialComplex::from_closed_family(n, std::move(closed));
  if (names.size() == n) x = x.with_labels(names);
  return x;
}

// Largest inclusion-minimal non-face, read off the face set. Ties go to the
// lexicographically least member list.
std::pair<std::size_t, Simplex> largest_minimal_nonface(std::size_t n,
                                                        const std::vector<Mask>& faces) {
  std::vector<char> is_face(std::size_t{1} << n, 0);
  for (Mask m : faces) is_face[m] = 1;
  std::size_t best = 0;
  Simplex witness;
  for (Mask f : faces) {
    const std::size_t start = f == 0 ? 0 : 64 - static_cast<std::size_t>(std::countl_zero(f));
    for (std::size_t i = start; i < n; ++i) {
      const Mask s = f | bit(i);
      if (is_face[s]) continue;
      bool minimal = true;
      for (Mask rest = s; rest != 0 && minimal; rest &= rest - 1) {
        const Mask j = rest & (~rest + 1);
        minimal = is_face[s ^ j] != 0;
      }
      if (!minimal) continue;
      const auto size = static_cast<std::size_t>(std::popcount(s));
      Simplex cand = mask_to_simplex(s);
      if (size > best || (size == best && cand < witness)) {
        best = size;
        witness = std::move(cand);
      }
    }
  }
  return {best, witness};
}

// Exhaustive scan: every subfamily S with empty intersection has a
// non-meeting subfamily of at most h members; h is the largest such minimum.
template <class State, class Meet>
std::size_t helly_by_definition(std::size_t n, const Meet& meet) {
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::optional<State>> states(total);
  std::vector<char> meets(total, 0);
  meets[0] = 1;
  for (Mask s = 1; s < total; ++s) {
    const Mask low = s & (~s + 1);
    const Mask rest = s ^ low;
    const auto i = static_cast<std::size_t>(std::countr_zero(low));
    if (rest == 0) {
      states[s] = meet(nullptr, i);
    } else if (meets[rest]) {
      states[s] = meet(&*states[rest], i);
    }
    meets[s] = states[s].has_value() ? 1 : 0;
  }
  std::size_t h = 1;
  for (Mask s = 1; s < total; ++s) {
    if (meets[s]) continue;
    std::size_t smallest = n + 1;
    for (Mask t = s; t != 0; t = (t - 1) & s) {
      if (!meets[t]) smallest = std::min<std::size_t>(smallest, std::popcount(t));
    }
    h = std::max(h, smallest);
  }
  return h;
}

template <class State, class Meet>
HellyReport helly_report(std::size_t n, const Meet& meet, const std::vector<std::string>& names,
                         const HellyOptions& options) {
  if (n > options.max_members) {
    throw GuardExceeded("Helly number supports at most " + std::to_string(options.max_members) +
                        " members, got " + std::to_string(n));
  }
  const auto faces = face_masks<State>(n, meet);
  HellyReport report;
  auto [size, witness] = largest_minimal_nonface(n, faces);
  report.helly_number = std::max<std::size_t>(1, size);
  report.witness = std::move(witness);
  if (n <= options.definition_cap) {
    report.by_definition = helly_by_definition<State>(n, meet);
    report.agree = *report.by_definition == report.helly_number;
  }
  report.nerve_leray = leray_number(nerve_from_masks(n, faces, names));
  report.bound = 1 + report.nerve_leray;
  report.holds = report.helly_number <= report.bound;
  return report;
}

void validate(const BoxFamily& family) {
  if (family.names.size() != family.members.size()) {
    throw InvalidArgument("box family needs one name per member");
  }
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    if (family.members[i].dimension() != family.dimension) {
      throw InvalidArgument("member " + family.names[i] + " has dimension " +
                            std::to_string(family.members[i].dimension()) + ", expected " +
                            std::to_string(family.dimension));
    }
  }
}

void validate(const AtomFamily& family) {
  if (family.names.size() != family.members.size()) {
    throw InvalidArgument("atom family needs one name per member");
  }
  for (const auto& m : family.members) {
    if (!std::is_sorted(m.begin(), m.end()) ||
        std::adjacent_find(m.begin(), m.end()) != m.end()) {
      throw InvalidArgument("atom lists must be sorted and duplicate free");
    }
    if (!m.empty() && m.back() >= family.atoms.size()) {
      throw InvalidArgument("atom index out of range");
    }
  }
}

}  // namespace

SimplicialComplex nerve(const BoxFamily& family) {
  validate(family);
  return nerve_from_masks(family.size(), face_masks<Box>(family.size(), BoxMeet{&family}),
                          family.names);
}

SimplicialComplex nerve(const AtomFamily& family) {
  validate(family);
  return nerve_from_masks(family.size(),
                          face_masks<std::vector<std::size_t>>(family.size(), AtomMeet{&family}),
                          family.names);
}

SimplicialComplex nerve(const FrFamily& family) {
  return nerve_from_masks(family.size(),
                          face_masks<std::vector<Box>>(family.size(), ChoiceMeet{&family}),
                          family.names);
}

HellyReport helly_number(const BoxFamily& family, const HellyOptions& options) {
  validate(family);
  return helly_report<Box>(family.size(), BoxMeet{&family}, family.names, options);
}

HellyReport helly_number(const AtomFamily& family, const HellyOptions& options) {
  validate(family);
  return helly_report<std::vector<std::size_t>>(family.size(), AtomMeet{&family}, family.names,
                                                options);
}

HellyReport helly_number(const FrFamily& family, const HellyOptions& options) {
  return helly_report<std::vector<Box>>(family.size(), ChoiceMeet{&family}, family.names,
                                        options);
}

FrFamily make_fr_family(BoxFamily base, std::vector<std::vector<std::size_t>> grouping,
                        std::vector<std::string> names, std::size_t r) {
  validate(base);
  if (r == 0) throw InvalidArgument("r must be at least 1");
  if (grouping.empty()) throw InvalidArgument("an (F, r)-family needs at least one member");
  if (grouping.size() > kMaxNerveMembers) throw InvalidArgument("too many members");
  if (names.empty()) {
    for (std::size_t i = 0; i < grouping.size(); ++i) names.push_back("G" + std::to_string(i + 1));
  }
  if (names.size() != grouping.size()) throw InvalidArgument("one name per member required");

  std::vector<int> owner(base.size(), -1);
  for (std::size_t g = 0; g < grouping.size(); ++g) {
    auto& group = grouping[g];
    if (group.empty()) throw FrViolation("member " + names[g] + " has no pieces", {g});
    std::sort(group.begin(), group.end());
    for (std::size_t p : group) {
      if (p >= base.size()) throw InvalidArgument("piece index out of range");
      if (owner[p] != -1) {
        throw InvalidArgument("piece " + base.names[p] + " is used by two members");
      }
      owner[p] = static_cast<int>(g);
      if (base.members[p].empty()) {
        throw FrViolation("piece " + base.names[p] + " is empty", {g});
      }
    }
    if (group.size() > r) {
      throw FrViolation("member " + names[g] + " has " + std::to_string(group.size()) +
                            " pieces, more than r = " + std::to_string(r),
                        {g});
    }
    for (std::size_t a = 0; a < group.size(); ++a) {
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        if (base.members[group[a]].meets(base.members[group[b]])) {
          throw FrViolation("pieces " + base.names[group[a]] + " and " + base.names[group[b]] +
                                " of member " + names[g] + " intersect",
                            {group[a], group[b]});
        }
      }
    }
  }
  for (std::size_t p = 0; p < base.size(); ++p) {
    if (owner[p] == -1) throw InvalidArgument("piece " + base.names[p] + " belongs to no member");
  }

  FrFamily family{std::move(base), std::move(names), std::move(grouping), r};
  // Pieces of one member are disjoint, so distinct piece choices give
  // disjoint boxes; only the count of nonempty choices can fail.
  const ChoiceMeet meet{&family};
  walk_faces<std::vector<Box>>(
      family.size(), 0, 0, nullptr, meet, [&](Mask mask, const std::vector<Box>* state) {
        if (state != nullptr && state->size() > r) {
          const Simplex s = mask_to_simplex(mask);
          throw FrViolation("intersection of " + s.to_string() + " splits into " +
                                std::to_string(state->size()) + " pieces, more than r = " +
                                std::to_string(r),
                            std::vector<std::size_t>(s.begin(), s.end()));
        }
      });
  return family;
}

std::size_t required_r(const FrFamily& family) {
  std::size_t r = 0;
  walk_faces<std::vector<Box>>(family.size(), 0, 0, nullptr, ChoiceMeet{&family},
                               [&](Mask, const std::vector<Box>* state) {
                                 if (state != nullptr) r = std::max(r, state->size());
                               });
  return std::max<std::size_t>(r, 1);
}

FrFamily singleton_fr_family(const BoxFamily& base) {
  std::vector<std::vector<std::size_t>> grouping;
  for (std::size_t i = 0; i < base.size(); ++i) grouping.push_back({i});
  return make_fr_family(base, std::move(grouping), base.names, 1);
}

PiecesProjection pieces_projection(const FrFamily& family) {
  const SimplicialComplex pieces_nerve = nerve(family.pieces);
  std::vector<std::vector<VertexId>> parts;
  for (const auto& g : family.groups) parts.emplace_back(g.begin(), g.end());
  PartitionedComplex px(pieces_nerve, std::move(parts));
  SimplicialComplex image = project(px);
  SimplicialComplex group_nerve = nerve(family);
  const bool image_matches = image == group_nerve;
  FiberBound fiber = fiber_bound(px);
  const bool within = fiber.r <= family.r;

  std::vector<std::pair<Mask, std::size_t>> choice_counts;
  walk_faces<std::vector<Box>>(family.size(), 0, 0, nullptr, ChoiceMeet{&family},
                               [&](Mask mask, const std::vector<Box>* state) {
                                 if (state != nullptr) choice_counts.emplace_back(mask, state->size());
                               });
  const auto sections = sections_by_image(px);
  bool counts_match = true;
  for (const auto& [mask, count] : choice_counts) {
    const auto it = sections.find(mask_to_simplex(mask));
    counts_match = counts_match && it != sections.end() && it->second.size() == count;
  }
  std::size_t nonempty_images = 0;
  for (const auto& [image_simplex, list] : sections) nonempty_images += image_simplex.empty() ? 0 : 1;
  counts_match = counts_match && nonempty_images == choice_counts.size();

  return PiecesProjection{std::move(px), std::move(image), std::move(group_nerve), image_matches,
                          std::move(fiber), within, counts_match};
}

AmentaReport check_amenta(const FrFamily& family, const HellyOptions& options) {
  AmentaReport report;
  const HellyReport helly = helly_number(family, options);
  const PiecesProjection proj = pieces_projection(family);
  report.helly = helly.helly_number;
  report.d = family.pieces.dimension;
  report.r = family.r;
  report.fiber_bound = proj.fiber.r;
  report.leray_pieces = leray_number(proj.x.complex());
  report.leray_groups = helly.nerve_leray;
  report.bound = report.r * (report.d + 1);

  const std::size_t rp = report.fiber_bound;
  report.helly_leray = report.helly <= 1 + report.leray_groups;
  report.image_matches = proj.image_matches && proj.choice_counts_match;
  report.projection_bound = report.leray_groups + 1 <= rp * report.leray_pieces + rp;
  report.fiber_within_r = proj.fiber_within_r;
  report.pieces_leray_within_d = report.leray_pieces <= report.d;
  report.holds = report.helly <= report.bound;
  report.chain_holds = report.helly_leray && report.image_matches && report.projection_bound &&
                       report.fiber_within_r && report.pieces_leray_within_d && report.holds;
  return report;
}

FrFamily random_fr_family(std::size_t d, std::size_t groups, std::size_t r, std::uint64_t seed,
                          std::size_t extent, std::size_t max_attempts) {
  if (d == 0 || groups == 0 || r == 0 || extent == 0) {
    throw InvalidArgument("random_fr_family needs d, groups, r and extent >= 1");
  }
  // Side lengths up to about extent / (2 r) keep the pieces of a member
  // likely to fit side by side.
  const std::uint64_t max_side = std::max<std::uint64_t>(1, extent / (2 * r));
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    CounterRng rng(seed, attempt + 1);
    BoxFamily base;
    base.dimension = d;
    std::vector<std::vector<std::size_t>> grouping(groups);
    for (std::size_t g = 0; g < groups; ++g) {
      const std::size_t count = 1 + rng.below(r);
      for (std::size_t j = 0; j < count; ++j) {
        std::vector<Interval> axes;
        for (std::size_t a = 0; a < d; ++a) {
          const std::uint64_t side = rng.below(max_side + 1);
          const std::uint64_t lo = rng.below(extent - std::min<std::uint64_t>(side, extent) + 1);
          axes.push_back({Rational(lo), Rational(lo + side)});
        }
        grouping[g].push_back(base.size());
        base.members.emplace_back(std::move(axes));
        base.names.push_back("G" + std::to_string(g + 1) + "." + std::to_string(j + 1));
      }
    }
    try {
      return make_fr_family(std::move(base), std::move(grouping), {}, r);
    } catch (const FrViolation&) {
    }
  }
  throw GuardExceeded("no valid (F, r)-family after " + std::to_string(max_attempts) +
                      " attempts");
}

}  // namespace leraytk
