// Packets of characters attached to a discrete parameter: members indexed by
// left cosets of a real-form subgroup inside the Levi Weyl group, their
// character data, the member-wise conjugation operation, and stable sums.
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "dualnorm/linalg.hpp"
#include "dualnorm/parameters.hpp"
#include "dualnorm/root_datum.hpp"
#include "dualnorm/torus.hpp"
#include "dualnorm/unit_value.hpp"

namespace dualnorm::param {

enum class Flavor { Classical, Renormalized };

inline std::string to_string(Flavor f) {
    return f == Flavor::Classical ? "classical" : "renormalized";
}

/// Deterministic short label for a Weyl word.
inline std::string word_label(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(word[i]);
    }
    return out;
}

/// Order Weyl elements by (word length, word, matrix); BFS enumeration gives
/// geodesic words, so the identity sorts first and representatives are stable.
inline bool word_order(const WeylElement& a, const WeylElement& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.word != b.word) return a.word < b.word;
    return a.m < b.m;
}

/// Closure of a generating set inside a finite group of Weyl elements.
inline std::vector<WeylElement> subgroup_closure(const std::vector<WeylElement>& gens,
                                                 std::size_t rank) {
    std::vector<WeylElement> elems{weyl_identity(rank)};
    std::vector<IMat> seen{elems[0].m};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const WeylElement& g : gens) {
            WeylElement next = weyl_product(elems[i], g);
            if (std::find(seen.begin(), seen.end(), next.m) == seen.end()) {
                seen.push_back(next.m);
                elems.push_back(next);
                if (elems.size() > kWeylClosureCap)
                    throw domain_error("subgroup closure exceeded element cap");
            }
        }
    }
    std::sort(elems.begin(), elems.end(), word_order);
    return elems;
}

struct PacketMember {
    WeylElement rep;                          // canonical coset representative
    std::vector<WeylElement> coset;           // full left coset, sorted
    std::vector<torus::CharacterData> char_data;  // sorted multiset
    Flavor flavor = Flavor::Classical;
    Orientation orientation = Orientation::Standard;
    std::string label;
};

struct Packet {
    DiscreteParameter parameter;
    std::vector<WeylElement> omega_r;         // the subgroup, sorted
    std::vector<PacketMember> members;        // sorted by representative
    Flavor flavor = Flavor::Classical;
};

namespace detail {

inline void check_subgroup(const std::vector<WeylElement>& group,
                           const std::vector<WeylElement>& sub) {
    auto in_group = [&](const WeylElement& w) {
        for (const WeylElement& g : group)
            if (g.m == w.m) return true;
        return false;
    };
    bool has_identity = false;
    for (const WeylElement& a : sub) {
        if (a.is_identity()) has_identity = true;
        if (!in_group(a))
            throw domain_error("packet: subgroup element lies outside the Weyl group");
        for (const WeylElement& b : sub) {
            WeylElement ab = weyl_product(a, b);
            bool found = false;
            for (const WeylElement& c : sub)
                if (c.m == ab.m) {
                    found = true;
                    break;
                }
            if (!found) throw domain_error("packet: subgroup is not closed under products");
        }
    }
    if (!has_identity) throw domain_error("packet: subgroup misses the identity");
}

inline std::string member_label(Flavor flavor, const std::vector<int>& word) {
    return (flavor == Flavor::Classical ? "pi[" : "piD[") + word_label(word) + "]";
}

}  // namespace detail

/// Build the packet of the parameter for the given real-form subgroup of the
/// Levi Weyl group.  Members are the left cosets; each member carries the
/// multiset of character data with numerators k^{-1} mu - iota over its coset.
inline Packet build_packet(const DiscreteParameter& p,
                           const std::vector<WeylElement>& omega_r_in) {
    std::vector<WeylElement> group = weyl_group(p.frame.levi_datum());
    std::vector<WeylElement> omega_r = omega_r_in;
    std::sort(omega_r.begin(), omega_r.end(), word_order);
    detail::check_subgroup(group, omega_r);

    QVec iota = p.frame.iota();
    CVec iota_c = to_cvec(iota);

    Packet pk;
    pk.parameter = p;
    pk.omega_r = omega_r;
    pk.flavor = Flavor::Classical;

    std::vector<bool> used(group.size(), false);
    std::sort(group.begin(), group.end(), word_order);
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (used[i]) continue;
        PacketMember m;
        m.flavor = Flavor::Classical;
        m.orientation = p.frame.orientation;
        // Left coset group[i] * omega_r.
        for (const WeylElement& h : omega_r) {
            WeylElement k = weyl_product(group[i], h);
            for (std::size_t j = i; j < group.size(); ++j)
                if (group[j].m == k.m) {
                    used[j] = true;
                    m.coset.push_back(group[j]);
                    break;
                }
            torus::CharacterData cd;
            cd.nu = sub(k.inverse().apply_cochar(p.mu), iota_c);
            cd.lam = p.lam;
            m.char_data.push_back(cd);
        }
        std::sort(m.coset.begin(), m.coset.end(), word_order);
        std::sort(m.char_data.begin(), m.char_data.end());
        m.rep = m.coset.front();
        m.label = detail::member_label(m.flavor, m.rep.word);
        pk.members.push_back(std::move(m));
    }
    std::sort(pk.members.begin(), pk.members.end(),
              [](const PacketMember& a, const PacketMember& b) {
                  return word_order(a.rep, b.rep);
              });
    return pk;
}

/// Member-wise conjugation: character data are negated, the flavor flips to
/// renormalized, and the orientation bookkeeping flips.  The coset is kept.
inline PacketMember conjugate_member(const PacketMember& m) {
    if (m.flavor != Flavor::Classical)
        throw domain_error("conjugate_member: member is already renormalized");
    PacketMember out = m;
    out.flavor = Flavor::Renormalized;
    out.orientation = flip(m.orientation);
    for (auto& cd : out.char_data) cd = torus::d_character(cd);
    std::sort(out.char_data.begin(), out.char_data.end());
    out.label = detail::member_label(out.flavor, out.rep.word);
    return out;
}

/// The renormalized packet: conjugate of every classical member.
inline Packet build_packet_D(const DiscreteParameter& p,
                             const std::vector<WeylElement>& omega_r) {
    Packet pk = build_packet(p, omega_r);
    pk.flavor = Flavor::Renormalized;
    for (auto& m : pk.members) m = conjugate_member(m);
    return pk;
}

/// Half sum of positive Levi coroots in the standard orientation regardless
/// of the frame's own orientation flag.
inline QVec iota_standard(const DualGroupFrame& frame) {
    return half_sum_coroots(frame.rd, frame.levi);
}

/// Multiset (sorted) of all character data across the packet.
inline std::vector<torus::CharacterData> stable_character_data(const Packet& pk) {
    std::vector<torus::CharacterData> all;
    for (const auto& m : pk.members)
        all.insert(all.end(), m.char_data.begin(), m.char_data.end());
    std::sort(all.begin(), all.end());
    return all;
}

/// Multiset of orientation-corrected numerators: each datum's numerator plus
/// iota in the member's orientation.  Packets presenting one parameter in
/// different conventions agree on this multiset exactly.
inline std::vector<torus::CharacterData> stable_numerator_data(const Packet& pk) {
    QVec iota = iota_standard(pk.parameter.frame);
    std::vector<torus::CharacterData> all;
    for (const auto& m : pk.members) {
        QVec signed_iota = m.orientation == Orientation::Standard ? iota : neg(iota);
        CVec shift = to_cvec(signed_iota);
        for (const auto& cd : m.char_data) {
            torus::CharacterData out = cd;
            out.nu = add(cd.nu, shift);
            all.push_back(std::move(out));
        }
    }
    std::sort(all.begin(), all.end());
    return all;
}

/// Common central value of every member character at a central point; throws
/// when the members disagree (they never do for a valid packet).
inline UnitValue packet_central_value(const Packet& pk, const torus::TorusPoint& z) {
    bool have = false;
    UnitValue val = UnitValue::one();
    for (const auto& m : pk.members)
        for (const auto& cd : m.char_data) {
            UnitValue v = torus::eval_character(cd, z);
            if (!have) {
                val = v;
                have = true;
            } else if (!(v == val)) {
                throw domain_error("packet central value differs across members");
            }
        }
    if (!have) throw domain_error("packet central value: empty packet");
    return val;
}

}  // namespace dualnorm::param
