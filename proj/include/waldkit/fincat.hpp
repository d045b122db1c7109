#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waldkit/report.hpp"

namespace waldkit {

using ObjId = int;
using MorId = int;
inline constexpr int kNone = -1;

// A finite category presented by explicit tables.  Objects must all be added
// before the first morphism.
class FinCategory {
public:
    ObjId add_object(std::string name);
    MorId add_morphism(std::string name, ObjId src, ObjId dst);
    void set_composite(MorId g, MorId f, MorId gf);
    void set_identity(ObjId a, MorId id);
    void set_zero(ObjId z) { zero_ = check_obj(z); }

    int num_objects() const { return static_cast<int>(object_names_.size()); }
    int num_morphisms() const { return static_cast<int>(mor_names_.size()); }
    const std::string& object_name(ObjId a) const { return object_names_.at(a); }
    const std::string& morphism_name(MorId f) const { return mor_names_.at(f); }
    ObjId src(MorId f) const { return src_.at(f); }
    ObjId dst(MorId f) const { return dst_.at(f); }
    ObjId zero() const { return zero_; }
    MorId identity(ObjId a) const { return identities_.at(a); }

    // g∘f, or kNone when the table has no entry.  Throws if not composable.
    MorId composite(MorId g, MorId f) const;
    // g∘f; throws when undefined.
    MorId compose(MorId g, MorId f) const;

    const std::vector<MorId>& hom(ObjId a, ObjId b) const {
        return hom_[static_cast<std::size_t>(a) * object_names_.size() + b];
    }
    const std::vector<MorId>& out(ObjId a) const { return out_.at(a); }

    std::optional<ObjId> find_object(const std::string& name) const;
    std::optional<MorId> find_morphism(const std::string& name) const;

    // The composite a → 0 → b.  Requires a valid zero object.
    MorId zero_morphism(ObjId a, ObjId b) const;
    bool is_iso(MorId f) const;

private:
    ObjId check_obj(ObjId a) const;
    MorId check_mor(MorId f) const;

    std::vector<std::string> object_names_;
    std::vector<std::string> mor_names_;
    std::vector<ObjId> src_, dst_;
    std::vector<int> out_pos_;                  // position of f in out_[src f]
    std::vector<std::vector<MorId>> out_;
    std::vector<std::vector<MorId>> hom_;
    std::vector<std::vector<MorId>> composite_;  // composite_[f][out_pos_[g]] = g∘f
    std::vector<MorId> identities_;
    ObjId zero_ = kNone;
    std::map<std::string, ObjId> obj_index_;
    std::map<std::string, MorId> mor_index_;
};

// Pushout of a cofibration c: A↣B along f: A→C.
struct PushoutWitness {
    ObjId obj = kNone;
    MorId inc_cof = kNone;    // B → P
    MorId inc_other = kNone;  // C → P
};

struct FinCofCategory {
    std::string name;
    FinCategory base;
    std::vector<char> cofibration;
    std::map<std::pair<MorId, MorId>, PushoutWitness> witnesses;  // key (c, f)

    bool is_cofibration(MorId f) const { return cofibration.at(f) != 0; }
    const PushoutWitness* witness(MorId c, MorId f) const;
    void add_witness(MorId c, MorId f, PushoutWitness w) { witnesses[{c, f}] = w; }
};

using CategoryPtr = std::shared_ptr<const FinCofCategory>;

struct Functor {
    CategoryPtr source, target;
    std::vector<ObjId> on_objects;
    std::vector<MorId> on_morphisms;

    ObjId obj(ObjId a) const { return on_objects.at(a); }
    MorId mor(MorId f) const { return on_morphisms.at(f); }
};

// Functor on the product category; tables indexed by (left, right) pairs.
struct BiFunctor {
    CategoryPtr left, right, target;
    std::vector<ObjId> on_objects;    // a * |Obj right| + b
    std::vector<MorId> on_morphisms;  // f * |Mor right| + g

    ObjId obj(ObjId a, ObjId b) const {
        return on_objects.at(static_cast<std::size_t>(a) * right->base.num_objects() + b);
    }
    MorId mor(MorId f, MorId g) const {
        return on_morphisms.at(static_cast<std::size_t>(f) * right->base.num_morphisms() + g);
    }
    Functor partial_left(ObjId a) const;   // F(a, ·)
    Functor partial_right(ObjId b) const;  // F(·, b)
};

ValidationReport validate_category(const FinCategory& C);

// Violation kinds used by validate_cofibrations:
//   cof1.iso, cof1.initial, cof.closure, cof2.witness-invalid,
//   cof2.inc-not-cofibration, cof2.witness-missing (a pushout exists but is not
//   supplied), cof2.no-pushout (exhaustive search shows no pushout exists),
//   cof2.no-quotient (as no-pushout, for a span (c, A→0)).
ValidationReport validate_cofibrations(const FinCofCategory& C);

// True when the only Cof2 failures are cof2.no-pushout entries, i.e. every span
// that has a pushout at all has a valid witness, quotients included.  This is
// what the S-construction needs.
bool s_admissible(const ValidationReport& cofibration_report);

// Exhaustive universal-property check of the square
//   A --c--> B, A --f--> C, B --inc_cof--> P, C --inc_other--> P.
bool is_pushout(const FinCategory& C, MorId c, MorId f, const PushoutWitness& w,
                std::string* why = nullptr);
std::optional<PushoutWitness> find_pushout(const FinCategory& C, MorId c, MorId f);

// The unique m: P → Q with m∘w.inc_cof = v and m∘w.inc_other = u, by search.
std::optional<MorId> mediating_morphism(const FinCategory& C, const PushoutWitness& w, MorId v,
                                        MorId u);

struct Quotient {
    ObjId obj;
    MorId map;  // B → B/A
};
Quotient quotient(const FinCofCategory& C, MorId c);

ValidationReport validate_functor(const Functor& F);
ValidationReport is_exact(const Functor& F);
ValidationReport validate_bifunctor(const BiFunctor& F);
ValidationReport is_biexact(const BiFunctor& F);

// Generators.
struct Poset {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> relations;  // (x, y) means x ≤ y
};

FinCofCategory trivial_category();
FinCofCategory lattice_category(const Poset& L, std::string name = "lattice");
Poset chain_poset(int length);  // bot < a1 < ... < a_length
Poset diamond_poset();          // bot < a, b < top

// Order on a lattice category, read back from its cofibrations.
bool lattice_leq(const FinCofCategory& C, ObjId x, ObjId y);

Functor identity_functor(const CategoryPtr& C);
Functor zero_functor(const CategoryPtr& C, const CategoryPtr& D);
Functor meet_with(const CategoryPtr& L, ObjId m);
BiFunctor meet_bifunctor(const CategoryPtr& L);
BiFunctor join_bifunctor(const CategoryPtr& L);
BiFunctor zero_bifunctor(const CategoryPtr& C, const CategoryPtr& D, const CategoryPtr& E);

}  // namespace waldkit
