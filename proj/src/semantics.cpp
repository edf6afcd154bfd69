#include "argwb/semantics.hpp"

#include <algorithm>
#include <cstdint>

#include "argwb/error.hpp"

namespace argwb {

std::string_view to_string(Semantics sem) {
  switch (sem) {
    case Semantics::Grounded: return "GR";
    case Semantics::Complete: return "CO";
    case Semantics::Preferred: return "PR";
    case Semantics::Stable: return "ST";
  }
  return "?";
}

std::string_view to_string(Label label) {
  switch (label) {
    case Label::In: return "IN";
    case Label::Out: return "OUT";
    case Label::Undec: return "UNDEC";
  }
  return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) {
  if (text == "GR" || text == "grounded") return Semantics::Grounded;
  if (text == "CO" || text == "complete") return Semantics::Complete;
  if (text == "PR" || text == "preferred") return Semantics::Preferred;
  if (text == "ST" || text == "stable") return Semantics::Stable;
  return std::nullopt;
}

bool extension_order(const Extension& a, const Extension& b) {
  if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
  return std::lexicographical_compare(a.members.begin(), a.members.end(), b.members.begin(),
                                      b.members.end());
}

void sort_extensions(std::vector<Extension>& extensions) {
  std::sort(extensions.begin(), extensions.end(), extension_order);
}

namespace {

using Mask = std::vector<char>;

Mask to_mask(const ArgumentationFramework& f, const IdSet& s) {
  Mask m(f.size(), 0);
  for (auto i : f.indices(s)) m[i] = 1;
  return m;
}

IdSet from_mask(const ArgumentationFramework& f, const Mask& m) {
  IdSet out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) out.insert(out.end(), f.id_at(i));
  return out;
}

bool conflict_free(const ArgumentationFramework& f, const Mask& s) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!s[i]) continue;
    for (auto t : f.targets_of(i))
      if (s[t]) return false;
  }
  return true;
}

Mask attacked_by(const ArgumentationFramework& f, const Mask& s) {
  Mask out(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!s[i]) continue;
    for (auto t : f.targets_of(i)) out[t] = 1;
  }
  return out;
}

Mask defended_by(const ArgumentationFramework& f, const Mask& s) {
  const Mask hit = attacked_by(f, s);
  Mask out(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& atk = f.attackers_of(i);
    out[i] = std::all_of(atk.begin(), atk.end(), [&](std::size_t b) { return hit[b] != 0; });
  }
  return out;
}

bool subset_of(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

// Labels used during the admissible-set search.
enum : std::uint8_t { kOpen = 0, kIn = 1, kOut = 2, kBlocked = 3 };

// Depth-first labelling search over admissible sets that extend the grounded
// extension. Starts from the grounded labelling (its UNDEC arguments are
// open) and branches on the lowest open argument: IN first, then BLOCKED.
// In maximal mode, keeps only the subset-maximal admissible sets found.
class AdmissibleSearch {
 public:
  AdmissibleSearch(const ArgumentationFramework& f, bool maximal) : f_(f), maximal_(maximal) {}

  std::vector<Mask> run() {
    const Labelling grounded = grounded_labelling(f_);
    std::vector<std::uint8_t> lab(f_.size(), kOpen);
    for (std::size_t i = 0; i < f_.size(); ++i) {
      switch (grounded.at(f_.id_at(i))) {
        case Label::In: lab[i] = kIn; break;
        case Label::Out: lab[i] = kOut; break;
        case Label::Undec: lab[i] = f_.attacks(i, i) ? kBlocked : kOpen; break;
      }
    }
    recurse(lab);
    return std::move(found_);
  }

 private:
  // Every IN argument's attackers must be OUT or still attackable by an open
  // argument; otherwise no completion of this branch is admissible.
  bool viable(const std::vector<std::uint8_t>& lab) const {
    for (std::size_t x = 0; x < lab.size(); ++x) {
      if (lab[x] != kIn) continue;
      for (auto y : f_.attackers_of(x)) {
        if (lab[y] == kOut) continue;
        const auto& counter = f_.attackers_of(y);
        if (std::none_of(counter.begin(), counter.end(),
                         [&](std::size_t z) { return lab[z] == kOpen; }))
          return false;
      }
    }
    return true;
  }

  bool dominated(const std::vector<std::uint8_t>& lab) const {
    for (const auto& ext : found_) {
      bool inside = true;
      for (std::size_t i = 0; i < lab.size() && inside; ++i)
        if ((lab[i] == kIn || lab[i] == kOpen) && !ext[i]) inside = false;
      if (inside) return true;
    }
    return false;
  }

  void accept(const std::vector<std::uint8_t>& lab) {
    Mask s(lab.size(), 0);
    for (std::size_t i = 0; i < lab.size(); ++i) s[i] = lab[i] == kIn;
    if (!maximal_) {
      found_.push_back(std::move(s));
      return;
    }
    for (const auto& ext : found_)
      if (subset_of(s, ext)) return;
    std::erase_if(found_, [&](const Mask& ext) { return subset_of(ext, s); });
    found_.push_back(std::move(s));
  }

  void recurse(std::vector<std::uint8_t>& lab) {
    if (!viable(lab)) return;
    if (maximal_ && dominated(lab)) return;

    std::size_t pick = lab.size();
    for (std::size_t i = 0; i < lab.size(); ++i) {
      if (lab[i] == kOpen) {
        pick = i;
        break;
      }
    }
    if (pick == lab.size()) {
      // Viable with nothing open means every attacker of an IN argument is OUT.
      accept(lab);
      return;
    }

    bool can_be_in = !f_.attacks(pick, pick);
    for (auto t : f_.targets_of(pick))
      if (lab[t] == kIn) can_be_in = false;
    if (can_be_in) {
      auto next = lab;
      next[pick] = kIn;
      for (auto t : f_.targets_of(pick)) next[t] = kOut;
      for (auto y : f_.attackers_of(pick))
        if (next[y] == kOpen) next[y] = kBlocked;
      recurse(next);
    }
    lab[pick] = kBlocked;
    recurse(lab);
    lab[pick] = kOpen;
  }

  const ArgumentationFramework& f_;
  bool maximal_;
  std::vector<Mask> found_;
};

std::vector<Extension> package(const ArgumentationFramework& f, const std::vector<Mask>& sets,
                               Semantics sem) {
  std::vector<Extension> out;
  out.reserve(sets.size());
  for (const auto& m : sets) out.push_back(Extension{from_mask(f, m), sem});
  sort_extensions(out);
  return out;
}

}  // namespace

bool is_conflict_free(const ArgumentationFramework& f, const IdSet& s) {
  return conflict_free(f, to_mask(f, s));
}

IdSet characteristic_function(const ArgumentationFramework& f, const IdSet& s) {
  return from_mask(f, defended_by(f, to_mask(f, s)));
}

bool is_admissible(const ArgumentationFramework& f, const IdSet& s) {
  const Mask m = to_mask(f, s);
  return conflict_free(f, m) && subset_of(m, defended_by(f, m));
}

bool is_complete(const ArgumentationFramework& f, const IdSet& s) {
  const Mask m = to_mask(f, s);
  return conflict_free(f, m) && defended_by(f, m) == m;
}

bool is_stable(const ArgumentationFramework& f, const IdSet& s) {
  const Mask m = to_mask(f, s);
  if (!conflict_free(f, m)) return false;
  const Mask hit = attacked_by(f, m);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!m[i] && !hit[i]) return false;
  return true;
}

std::vector<int> grounded_rounds(const ArgumentationFramework& f) {
  std::vector<int> round(f.size(), 0);
  Mask in(f.size(), 0);
  for (int r = 1;; ++r) {
    const Mask next = defended_by(f, in);
    bool grew = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (next[i] && !in[i]) {
        round[i] = r;
        grew = true;
      }
    }
    if (!grew) break;
    in = next;
  }
  return round;
}

Extension grounded_extension(const ArgumentationFramework& f) {
  const auto rounds = grounded_rounds(f);
  IdSet members;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (rounds[i] > 0) members.insert(members.end(), f.id_at(i));
  return Extension{std::move(members), Semantics::Grounded};
}

std::vector<Extension> enumerate_extensions(const ArgumentationFramework& f, Semantics sem) {
  switch (sem) {
    case Semantics::Grounded:
      return {grounded_extension(f)};
    case Semantics::Complete: {
      auto admissible = AdmissibleSearch(f, false).run();
      std::erase_if(admissible, [&](const Mask& m) { return defended_by(f, m) != m; });
      return package(f, admissible, sem);
    }
    case Semantics::Preferred:
      return package(f, AdmissibleSearch(f, true).run(), sem);
    case Semantics::Stable: {
      // Every stable extension is preferred.
      auto preferred = AdmissibleSearch(f, true).run();
      std::erase_if(preferred, [&](const Mask& m) {
        const Mask hit = attacked_by(f, m);
        for (std::size_t i = 0; i < m.size(); ++i)
          if (!m[i] && !hit[i]) return true;
        return false;
      });
      return package(f, preferred, sem);
    }
  }
  return {};
}

bool acceptance_status(const ArgumentationFramework& f, const ArgId& a, Semantics sem, Mode mode) {
  f.index_of(a);
  const auto extensions = enumerate_extensions(f, sem);
  auto member = [&](const Extension& e) { return e.members.count(a) != 0; };
  if (mode == Mode::Credulous) return std::any_of(extensions.begin(), extensions.end(), member);
  return std::all_of(extensions.begin(), extensions.end(), member);
}

Labelling to_labelling(const ArgumentationFramework& f, const IdSet& in) {
  const Mask m = to_mask(f, in);
  const Mask hit = attacked_by(f, m);
  Labelling out;
  for (std::size_t i = 0; i < f.size(); ++i)
    out.emplace_hint(out.end(), f.id_at(i), m[i] ? Label::In : hit[i] ? Label::Out : Label::Undec);
  return out;
}

Labelling grounded_labelling(const ArgumentationFramework& f) {
  return to_labelling(f, grounded_extension(f).members);
}

bool is_legal_labelling(const ArgumentationFramework& f, const Labelling& labelling) {
  if (labelling.size() != f.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto it = labelling.find(f.id_at(i));
    if (it == labelling.end()) return false;
    bool any_in = false;
    bool all_out = true;
    for (auto b : f.attackers_of(i)) {
      const Label lb = labelling.at(f.id_at(b));
      any_in = any_in || lb == Label::In;
      all_out = all_out && lb == Label::Out;
    }
    if ((it->second == Label::Out) != any_in) return false;
    if ((it->second == Label::In) != all_out) return false;
  }
  return true;
}

}  // namespace argwb
