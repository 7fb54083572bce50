// Pairing tables between component-group elements and packet members: sign
// oracles, tables built from relative signs around a base member, Whittaker
// normalizations with their perfectness checks, and the renormalized reuse
// of a classical table.
#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dualnorm/component_group.hpp"
#include "dualnorm/packets.hpp"
#include "dualnorm/parameters.hpp"
#include "dualnorm/rational.hpp"
#include "dualnorm/unit_value.hpp"

namespace dualnorm::cg {

/// Exact evaluation of e^{2 pi i <lam_class, q>} when it is a sign; throws
/// when the value is not +1 or -1.
inline int tn_pairing_oracle(const QVec& lam_class, const TorsionElement& s) {
    Rat t = dot(lam_class, s.q);
    if (!(t * Rat(2)).is_integer())
        throw domain_error("tn pairing: value is not a sign");
    return t.is_integer() ? 1 : -1;
}

/// Relative sign between two packet members at a group element.
using RelSign = std::function<int(const TorsionElement&, std::size_t, std::size_t)>;

enum class LambdaOrientation { Lambda, LambdaBar };

inline std::string to_string(LambdaOrientation o) {
    return o == LambdaOrientation::Lambda ? "lambda" : "lambdabar";
}

/// A table of exact roots of unity (stored as turns) indexed by component
/// group elements (rows) and packet members (columns).
struct PairingTable {
    param::Flavor flavor = param::Flavor::Classical;
    std::string normalization;  // "plain", "lambda", or "lambdabar"
    std::vector<std::string> row_labels;
    std::vector<IVec> row_exponents;
    std::vector<std::string> col_labels;
    std::vector<std::vector<Rat>> turns;  // value(i, j) = e^{2 pi i turns[i][j]}
    std::size_t base_column = 0;
    std::vector<Rat> zeta_turns;  // value of the base character per row

    UnitValue value(std::size_t row, std::size_t col) const {
        return UnitValue::from_turns(turns.at(row).at(col));
    }

    bool columns_distinct() const {
        for (std::size_t a = 0; a < col_labels.size(); ++a)
            for (std::size_t b = a + 1; b < col_labels.size(); ++b) {
                bool same = true;
                for (std::size_t i = 0; i < row_labels.size(); ++i)
                    if (!(turns[i][a] - turns[i][b]).is_integer()) {
                        same = false;
                        break;
                    }
                if (same) return false;
            }
        return true;
    }
};

namespace detail {

inline void check_rel_signs(const std::vector<TorsionElement>& elems, std::size_t m,
                            const RelSign& rel) {
    for (const auto& s : elems) {
        for (std::size_t i = 0; i < m; ++i) {
            if (rel(s, i, i) != 1)
                throw domain_error("pairing: relative signs are not reflexive");
            for (std::size_t j = 0; j < m; ++j) {
                int v = rel(s, i, j);
                if (v != 1 && v != -1)
                    throw domain_error("pairing: relative sign is not a sign");
                for (std::size_t k = 0; k < m; ++k)
                    if (v * rel(s, j, k) != rel(s, i, k))
                        throw domain_error("pairing: relative signs are not transitive");
            }
        }
    }
}

/// Verify that every column is multiplicative across the group law.
inline void check_columns_are_characters(const ComponentGroup& group,
                                         const PairingTable& t) {
    std::map<IVec, std::size_t> row_of;
    for (std::size_t i = 0; i < t.row_exponents.size(); ++i)
        row_of[t.row_exponents[i]] = i;
    for (std::size_t a = 0; a < t.row_exponents.size(); ++a)
        for (std::size_t b = 0; b < t.row_exponents.size(); ++b) {
            IVec sum = t.row_exponents[a];
            for (std::size_t k = 0; k < sum.size(); ++k)
                sum[k] = (sum[k] + t.row_exponents[b][k]) % group.divisors[k];
            std::size_t c = row_of.at(sum);
            for (std::size_t j = 0; j < t.col_labels.size(); ++j)
                if (!(t.turns[a][j] + t.turns[b][j] - t.turns[c][j]).is_integer())
                    throw domain_error("pairing: a column is not a character");
        }
}

}  // namespace detail

/// Build a pairing table from a base character zeta (turns per generator)
/// and relative signs against a base member.  `kernel_exponents` lists the
/// elements on which every column divided by zeta must be trivial.
inline PairingTable pairing_from_signs(const ComponentGroup& group,
                                       const param::Packet& packet,
                                       std::size_t base_member,
                                       const std::vector<Rat>& zeta_gen_turns,
                                       const RelSign& rel,
                                       const std::vector<IVec>& kernel_exponents = {},
                                       bool require_zeta_order_two = false) {
    std::size_t m = packet.members.size();
    if (base_member >= m) throw domain_error("pairing: base member index out of range");
    if (zeta_gen_turns.size() != group.divisors.size())
        throw domain_error("pairing: zeta must give one turn per generator");
    if (require_zeta_order_two)
        for (const Rat& z : zeta_gen_turns)
            if (!(z * Rat(2)).is_integer())
                throw domain_error("pairing: base character must have order at most two");

    std::vector<TorsionElement> elems = group.elements();
    detail::check_rel_signs(elems, m, rel);

    PairingTable t;
    t.flavor = packet.flavor;
    t.normalization = "plain";
    t.base_column = base_member;
    for (const auto& mem : packet.members) t.col_labels.push_back(mem.label);
    for (const auto& s : elems) {
        IVec e = group.class_of_w(s.w);
        Rat zeta;
        for (std::size_t k = 0; k < e.size(); ++k)
            zeta = (zeta + Rat(e[k]) * zeta_gen_turns[k]).mod1();
        t.row_labels.push_back(s.label);
        t.row_exponents.push_back(e);
        t.zeta_turns.push_back(zeta);
        std::vector<Rat> row(m);
        for (std::size_t j = 0; j < m; ++j) {
            Rat turn = zeta;
            if (rel(s, j, base_member) == -1) turn = (turn + Rat(1, 2)).mod1();
            row[j] = turn;
        }
        t.turns.push_back(std::move(row));
    }

    detail::check_columns_are_characters(group, t);
    for (const IVec& k : kernel_exponents) {
        // Locate the row for this exponent tuple.
        std::size_t row = 0;
        bool found = false;
        for (std::size_t i = 0; i < t.row_exponents.size(); ++i)
            if (t.row_exponents[i] == k) {
                row = i;
                found = true;
                break;
            }
        if (!found) throw domain_error("pairing: kernel exponent tuple unknown");
        for (std::size_t j = 0; j < m; ++j)
            if (!(t.turns[row][j] - t.zeta_turns[row]).is_integer())
                throw domain_error("pairing: a column is nontrivial on the kernel");
    }
    if (!t.columns_distinct())
        throw domain_error("pairing: columns do not realize distinct characters");
    return t;
}

/// Whittaker-normalized table: the generic member's column is identically +1
/// and the table must be a perfect pairing (as many members as elements,
/// distinct character columns).
inline PairingTable whittaker_table(const ComponentGroup& group,
                                    const param::Packet& packet,
                                    LambdaOrientation orientation, const RelSign& rel,
                                    std::size_t generic_member, bool quasi_split) {
    if (!quasi_split)
        throw domain_error("whittaker table requires a quasi-split entry");
    std::vector<Rat> trivial(group.divisors.size());
    PairingTable t = pairing_from_signs(group, packet, generic_member, trivial, rel);
    t.normalization =
        orientation == LambdaOrientation::Lambda ? "lambda" : "lambdabar";
    if (packet.members.size() != group.order())
        throw domain_error("whittaker table is not perfect");
    for (std::size_t i = 0; i < t.row_labels.size(); ++i)
        if (!t.turns[i][t.base_column].is_integer())
            throw domain_error("whittaker table: base column is not identically +1");
    return t;
}

/// Renormalized reuse of a classical table: same values, columns relabeled
/// by the renormalized packet (the cosets, and hence the column order, are
/// preserved by member-wise conjugation).
inline PairingTable renormalized_table(const PairingTable& classical,
                                       const param::Packet& packet_d) {
    if (classical.flavor != param::Flavor::Classical)
        throw domain_error("renormalized table must start from a classical table");
    if (packet_d.flavor != param::Flavor::Renormalized)
        throw domain_error("renormalized table needs a renormalized packet");
    if (packet_d.members.size() != classical.col_labels.size())
        throw domain_error("renormalized table: member count mismatch");
    PairingTable out = classical;
    out.flavor = param::Flavor::Renormalized;
    out.col_labels.clear();
    for (const auto& mem : packet_d.members) out.col_labels.push_back(mem.label);
    return out;
}

/// Default class vector attached to a packet member: rho - w rho for the
/// member's canonical representative, with rho the Levi half sum of positive
/// roots in the standard orientation.
inline QVec default_lam_class(const param::DualGroupFrame& frame,
                              const param::PacketMember& member) {
    QVec rho = half_sum_roots(frame.rd, frame.levi);
    QVec wrho = member.rep.apply_char(rho);
    return sub(rho, wrho);
}

/// Default relative-sign oracle: the sign pairing of the difference of the
/// members' class vectors against the group element.
inline RelSign default_rel_signs(const param::DualGroupFrame& frame,
                                 const param::Packet& packet) {
    std::vector<QVec> classes;
    for (const auto& mem : packet.members) classes.push_back(default_lam_class(frame, mem));
    return [classes](const TorsionElement& s, std::size_t i, std::size_t j) {
        return tn_pairing_oracle(sub(classes.at(i), classes.at(j)), s);
    };
}

}  // namespace dualnorm::cg
