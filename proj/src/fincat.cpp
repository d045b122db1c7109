#include "waldkit/fincat.hpp"

#include <sstream>

namespace waldkit {

ObjId FinCategory::check_obj(ObjId a) const {
    if (a < 0 || a >= num_objects())
        throw StructuralError("object id out of range: " + std::to_string(a));
    return a;
}

MorId FinCategory::check_mor(MorId f) const {
    if (f < 0 || f >= num_morphisms())
        throw StructuralError("morphism id out of range: " + std::to_string(f));
    return f;
}

ObjId FinCategory::add_object(std::string name) {
    if (!mor_names_.empty())
        throw StructuralError("objects must be added before morphisms");
    if (obj_index_.count(name))
        throw StructuralError("duplicate object name '" + name + "'");
    ObjId id = num_objects();
    obj_index_[name] = id;
    object_names_.push_back(std::move(name));
    identities_.push_back(kNone);
    out_.emplace_back();
    hom_.assign(object_names_.size() * object_names_.size(), {});
    return id;
}

MorId FinCategory::add_morphism(std::string name, ObjId src, ObjId dst) {
    check_obj(src);
    check_obj(dst);
    if (mor_index_.count(name))
        throw StructuralError("duplicate morphism name '" + name + "'");
    MorId id = num_morphisms();
    mor_index_[name] = id;
    mor_names_.push_back(std::move(name));
    src_.push_back(src);
    dst_.push_back(dst);
    out_pos_.push_back(static_cast<int>(out_[src].size()));
    out_[src].push_back(id);
    hom_[static_cast<std::size_t>(src) * object_names_.size() + dst].push_back(id);
    // composite_[h] for every h ending at src grows by one slot.
    composite_.emplace_back(out_[dst].size(), kNone);
    for (MorId h = 0; h < id; ++h)
        if (dst_[h] == src)
            composite_[h].push_back(kNone);
    return id;
}

void FinCategory::set_composite(MorId g, MorId f, MorId gf) {
    check_mor(g);
    check_mor(f);
    check_mor(gf);
    if (src_[g] != dst_[f])
        throw StructuralError("composite entry for non-composable pair (" + mor_names_[g] + ", " +
                              mor_names_[f] + ")");
    composite_[f][out_pos_[g]] = gf;
}

void FinCategory::set_identity(ObjId a, MorId id) {
    check_obj(a);
    identities_[a] = check_mor(id);
}

MorId FinCategory::composite(MorId g, MorId f) const {
    if (src_.at(g) != dst_.at(f))
        throw StructuralError("not composable: (" + mor_names_[g] + ", " + mor_names_[f] + ")");
    return composite_[f][out_pos_[g]];
}

MorId FinCategory::compose(MorId g, MorId f) const {
    MorId gf = composite(g, f);
    if (gf == kNone)
        throw StructuralError("no composite recorded for (" + mor_names_[g] + ", " +
                              mor_names_[f] + ")");
    return gf;
}

std::optional<ObjId> FinCategory::find_object(const std::string& name) const {
    auto it = obj_index_.find(name);
    if (it == obj_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<MorId> FinCategory::find_morphism(const std::string& name) const {
    auto it = mor_index_.find(name);
    if (it == mor_index_.end())
        return std::nullopt;
    return it->second;
}

MorId FinCategory::zero_morphism(ObjId a, ObjId b) const {
    const auto& to0 = hom(a, zero_);
    const auto& from0 = hom(zero_, b);
    if (to0.size() != 1 || from0.size() != 1)
        throw ConstructionError("zero object is not initial and terminal");
    return compose(from0[0], to0[0]);
}

bool FinCategory::is_iso(MorId f) const {
    for (MorId g : hom(dst(f), src(f))) {
        if (composite(g, f) == identity(src(f)) && composite(f, g) == identity(dst(f)))
            return true;
    }
    return false;
}

const PushoutWitness* FinCofCategory::witness(MorId c, MorId f) const {
    auto it = witnesses.find({c, f});
    return it == witnesses.end() ? nullptr : &it->second;
}

namespace {

std::string pair_name(const FinCategory& C, MorId g, MorId f) {
    return "(" + C.morphism_name(g) + ", " + C.morphism_name(f) + ")";
}

}  // namespace

ValidationReport validate_category(const FinCategory& C) {
    ValidationReport rep;
    const int nm = C.num_morphisms();
    for (ObjId a = 0; a < C.num_objects(); ++a) {
        MorId id = C.identity(a);
        if (id == kNone) {
            rep.add("identity", "object " + C.object_name(a) + " has no identity");
            continue;
        }
        if (C.src(id) != a || C.dst(id) != a)
            rep.add("identity", "identity of " + C.object_name(a) + " is not an endomorphism");
    }
    if (!rep.ok())
        return rep;

    bool table_complete = true;
    for (MorId f = 0; f < nm; ++f) {
        for (MorId g : C.out(C.dst(f))) {
            MorId gf = C.composite(g, f);
            if (gf == kNone) {
                rep.add("compose.missing", "no composite for " + pair_name(C, g, f));
                table_complete = false;
            } else if (C.src(gf) != C.src(f) || C.dst(gf) != C.dst(g)) {
                rep.add("compose.type", "composite of " + pair_name(C, g, f) + " has wrong ends");
                table_complete = false;
            }
        }
    }
    for (MorId f = 0; f < nm; ++f) {
        MorId l = C.composite(C.identity(C.dst(f)), f);
        MorId r = C.composite(f, C.identity(C.src(f)));
        if (l != f)
            rep.add("identity", "identity law fails for pair " +
                                    pair_name(C, C.identity(C.dst(f)), f));
        if (r != f)
            rep.add("identity", "identity law fails for pair " +
                                    pair_name(C, f, C.identity(C.src(f))));
    }
    if (table_complete) {
        for (MorId f = 0; f < nm; ++f)
            for (MorId g : C.out(C.dst(f)))
                for (MorId h : C.out(C.dst(g))) {
                    if (C.composite(h, C.composite(g, f)) != C.composite(C.composite(h, g), f))
                        rep.add("associativity", "triple (" + C.morphism_name(h) + ", " +
                                                     C.morphism_name(g) + ", " +
                                                     C.morphism_name(f) + ")");
                }
    }
    if (C.zero() == kNone) {
        rep.add("zero", "no zero object");
    } else {
        for (ObjId a = 0; a < C.num_objects(); ++a) {
            if (C.hom(C.zero(), a).size() != 1 || C.hom(a, C.zero()).size() != 1)
                rep.add("zero", C.object_name(C.zero()) + " is not initial and terminal (object " +
                                    C.object_name(a) + ")");
        }
    }
    return rep;
}

bool is_pushout(const FinCategory& C, MorId c, MorId f, const PushoutWitness& w,
                std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };
    if (C.src(c) != C.src(f))
        return fail("span legs have different sources");
    if (w.obj < 0 || w.obj >= C.num_objects() || w.inc_cof < 0 || w.inc_other < 0 ||
        w.inc_cof >= C.num_morphisms() || w.inc_other >= C.num_morphisms())
        return fail("witness ids out of range");
    if (C.src(w.inc_cof) != C.dst(c) || C.src(w.inc_other) != C.dst(f) ||
        C.dst(w.inc_cof) != w.obj || C.dst(w.inc_other) != w.obj)
        return fail("witness legs have wrong ends");
    if (C.compose(w.inc_cof, c) != C.compose(w.inc_other, f))
        return fail("square does not commute");
    const ObjId B = C.dst(c), D = C.dst(f);
    for (ObjId Q = 0; Q < C.num_objects(); ++Q) {
        for (MorId v : C.hom(B, Q)) {
            for (MorId u : C.hom(D, Q)) {
                if (C.compose(v, c) != C.compose(u, f))
                    continue;
                int count = 0;
                for (MorId m : C.hom(w.obj, Q))
                    if (C.compose(m, w.inc_cof) == v && C.compose(m, w.inc_other) == u)
                        ++count;
                if (count != 1) {
                    return fail((count == 0 ? "no mediating morphism" : "non-unique mediating morphism") +
                                std::string(" for cocone (") + C.morphism_name(v) + ", " +
                                C.morphism_name(u) + ") into " + C.object_name(Q));
                }
            }
        }
    }
    return true;
}

std::optional<PushoutWitness> find_pushout(const FinCategory& C, MorId c, MorId f) {
    const ObjId B = C.dst(c), D = C.dst(f);
    for (ObjId P = 0; P < C.num_objects(); ++P)
        for (MorId ib : C.hom(B, P))
            for (MorId id : C.hom(D, P)) {
                PushoutWitness w{P, ib, id};
                if (C.compose(ib, c) == C.compose(id, f) && is_pushout(C, c, f, w))
                    return w;
            }
    return std::nullopt;
}

std::optional<MorId> mediating_morphism(const FinCategory& C, const PushoutWitness& w, MorId v,
                                        MorId u) {
    std::optional<MorId> found;
    for (MorId m : C.hom(w.obj, C.dst(v))) {
        if (C.compose(m, w.inc_cof) == v && C.compose(m, w.inc_other) == u) {
            if (found)
                return std::nullopt;
            found = m;
        }
    }
    return found;
}

ValidationReport validate_cofibrations(const FinCofCategory& CC) {
    const FinCategory& C = CC.base;
    ValidationReport rep;
    if (static_cast<int>(CC.cofibration.size()) != C.num_morphisms()) {
        rep.add("cof.shape", "cofibration flags do not match the morphism count");
        return rep;
    }
    for (MorId f = 0; f < C.num_morphisms(); ++f)
        if (!CC.is_cofibration(f) && C.is_iso(f))
            rep.add("cof1.iso", "isomorphism " + C.morphism_name(f) + " is not a cofibration");
    for (ObjId a = 0; a < C.num_objects(); ++a)
        for (MorId f : C.hom(C.zero(), a))
            if (!CC.is_cofibration(f))
                rep.add("cof1.initial", "initial morphism " + C.morphism_name(f) +
                                            " is not a cofibration");
    for (MorId f = 0; f < C.num_morphisms(); ++f) {
        if (!CC.is_cofibration(f))
            continue;
        for (MorId g : C.out(C.dst(f))) {
            MorId gf = C.composite(g, f);
            if (CC.is_cofibration(g) && gf != kNone && !CC.is_cofibration(gf))
                rep.add("cof.closure", "composite of cofibrations " + pair_name(C, g, f) +
                                           " is not a cofibration");
        }
    }
    for (const auto& [key, w] : CC.witnesses) {
        const auto [c, f] = key;
        const std::string span = pair_name(C, c, f);
        if (!CC.is_cofibration(c)) {
            rep.add("cof2.witness-invalid", "witness for " + span + ": first leg is not a cofibration");
            continue;
        }
        std::string why;
        if (!is_pushout(C, c, f, w, &why))
            rep.add("cof2.witness-invalid", "witness for " + span + ": " + why);
        if (w.inc_other >= 0 && w.inc_other < C.num_morphisms() && !CC.is_cofibration(w.inc_other))
            rep.add("cof2.inc-not-cofibration", "witness for " + span + ": inc " +
                                                    C.morphism_name(w.inc_other) +
                                                    " is not a cofibration");
    }
    for (MorId c = 0; c < C.num_morphisms(); ++c) {
        if (!CC.is_cofibration(c))
            continue;
        const ObjId A = C.src(c);
        for (MorId f : C.out(A)) {
            if (CC.witness(c, f))
                continue;
            const std::string span = pair_name(C, c, f);
            const bool to_zero = C.dst(f) == C.zero();
            if (find_pushout(C, c, f))
                rep.add("cof2.witness-missing", "no witness supplied for span " + span);
            else
                rep.add(to_zero ? "cof2.no-quotient" : "cof2.no-pushout",
                        "no pushout exists for span " + span);
        }
    }
    return rep;
}

bool s_admissible(const ValidationReport& rep) {
    for (const auto& v : rep.violations())
        if (v.kind != "cof2.no-pushout")
            return false;
    return true;
}

Quotient quotient(const FinCofCategory& CC, MorId c) {
    const FinCategory& C = CC.base;
    if (!CC.is_cofibration(c))
        throw ConstructionError("quotient of non-cofibration " + C.morphism_name(c));
    const auto& to0 = C.hom(C.src(c), C.zero());
    if (to0.size() != 1)
        throw ConstructionError("no unique morphism to the zero object");
    const PushoutWitness* w = CC.witness(c, to0[0]);
    if (!w)
        throw ConstructionError("no quotient witness for " + C.morphism_name(c));
    return {w->obj, w->inc_cof};
}

// ---------------------------------------------------------------- functors

ValidationReport validate_functor(const Functor& F) {
    ValidationReport rep;
    const FinCategory& S = F.source->base;
    const FinCategory& T = F.target->base;
    if (static_cast<int>(F.on_objects.size()) != S.num_objects() ||
        static_cast<int>(F.on_morphisms.size()) != S.num_morphisms()) {
        rep.add("functor.shape", "table sizes do not match the source category");
        return rep;
    }
    for (MorId f = 0; f < S.num_morphisms(); ++f) {
        MorId Ff = F.mor(f);
        if (Ff < 0 || Ff >= T.num_morphisms() || T.src(Ff) != F.obj(S.src(f)) ||
            T.dst(Ff) != F.obj(S.dst(f))) {
            rep.add("functor.type", "image of " + S.morphism_name(f) + " has wrong ends");
        }
    }
    if (!rep.ok())
        return rep;
    for (ObjId a = 0; a < S.num_objects(); ++a)
        if (F.mor(S.identity(a)) != T.identity(F.obj(a)))
            rep.add("functor.identity", "identity of " + S.object_name(a) + " not preserved");
    for (MorId f = 0; f < S.num_morphisms(); ++f)
        for (MorId g : S.out(S.dst(f)))
            if (F.mor(S.compose(g, f)) != T.compose(F.mor(g), F.mor(f)))
                rep.add("functor.composition", "composite " + pair_name(S, g, f) + " not preserved");
    return rep;
}

namespace {

// Shape and type failures make further checks meaningless; identity and
// composition failures do not.
bool well_typed(const ValidationReport& rep) {
    return !rep.has_kind("functor.shape") && !rep.has_kind("functor.type");
}

}  // namespace

ValidationReport is_exact(const Functor& F) {
    ValidationReport rep = validate_functor(F);
    if (!well_typed(rep))
        return rep;
    const FinCofCategory& S = *F.source;
    const FinCofCategory& T = *F.target;
    if (F.obj(S.base.zero()) != T.base.zero())
        rep.add("exact.zero", "F(0) = " + T.base.object_name(F.obj(S.base.zero())) + " is not 0");
    for (MorId f = 0; f < S.base.num_morphisms(); ++f)
        if (S.is_cofibration(f) && !T.is_cofibration(F.mor(f)))
            rep.add("exact.cofibration", "image of cofibration " + S.base.morphism_name(f) +
                                             " is not a cofibration");
    for (const auto& [key, w] : S.witnesses) {
        const auto [c, f] = key;
        PushoutWitness img{F.obj(w.obj), F.mor(w.inc_cof), F.mor(w.inc_other)};
        std::string why;
        if (!is_pushout(T.base, F.mor(c), F.mor(f), img, &why))
            rep.add("exact.pushout", "image of witness square " + pair_name(S.base, c, f) +
                                         " is not a pushout: " + why);
    }
    return rep;
}

Functor BiFunctor::partial_left(ObjId a) const {
    Functor F{right, target, {}, {}};
    const FinCategory& R = right->base;
    for (ObjId b = 0; b < R.num_objects(); ++b)
        F.on_objects.push_back(obj(a, b));
    const MorId ida = left->base.identity(a);
    for (MorId g = 0; g < R.num_morphisms(); ++g)
        F.on_morphisms.push_back(mor(ida, g));
    return F;
}

Functor BiFunctor::partial_right(ObjId b) const {
    Functor F{left, target, {}, {}};
    const FinCategory& L = left->base;
    for (ObjId a = 0; a < L.num_objects(); ++a)
        F.on_objects.push_back(obj(a, b));
    const MorId idb = right->base.identity(b);
    for (MorId f = 0; f < L.num_morphisms(); ++f)
        F.on_morphisms.push_back(mor(f, idb));
    return F;
}

ValidationReport validate_bifunctor(const BiFunctor& F) {
    ValidationReport rep;
    const FinCategory& L = F.left->base;
    const FinCategory& R = F.right->base;
    const FinCategory& T = F.target->base;
    if (F.on_objects.size() != static_cast<std::size_t>(L.num_objects()) * R.num_objects() ||
        F.on_morphisms.size() != static_cast<std::size_t>(L.num_morphisms()) * R.num_morphisms()) {
        rep.add("functor.shape", "table sizes do not match the product category");
        return rep;
    }
    for (MorId f = 0; f < L.num_morphisms(); ++f)
        for (MorId g = 0; g < R.num_morphisms(); ++g) {
            MorId h = F.mor(f, g);
            if (h < 0 || h >= T.num_morphisms() || T.src(h) != F.obj(L.src(f), R.src(g)) ||
                T.dst(h) != F.obj(L.dst(f), R.dst(g)))
                rep.add("functor.type", "image of (" + L.morphism_name(f) + ", " +
                                            R.morphism_name(g) + ") has wrong ends");
        }
    if (!rep.ok())
        return rep;
    for (ObjId a = 0; a < L.num_objects(); ++a)
        for (ObjId b = 0; b < R.num_objects(); ++b)
            if (F.mor(L.identity(a), R.identity(b)) != T.identity(F.obj(a, b)))
                rep.add("functor.identity", "identity of (" + L.object_name(a) + ", " +
                                                R.object_name(b) + ") not preserved");
    for (MorId f = 0; f < L.num_morphisms(); ++f)
        for (MorId f2 : L.out(L.dst(f)))
            for (MorId g = 0; g < R.num_morphisms(); ++g)
                for (MorId g2 : R.out(R.dst(g)))
                    if (F.mor(L.compose(f2, f), R.compose(g2, g)) !=
                        T.compose(F.mor(f2, g2), F.mor(f, g)))
                        rep.add("functor.composition",
                                "composite of (" + L.morphism_name(f2) + ", " + R.morphism_name(g2) +
                                    ") with (" + L.morphism_name(f) + ", " + R.morphism_name(g) +
                                    ") not preserved");
    return rep;
}

namespace {

// is_exact without the functoriality entries, which validate_bifunctor has
// already reported for the whole product.
ValidationReport exactness_only(const Functor& F) {
    ValidationReport full = is_exact(F), out;
    for (const auto& v : full.violations())
        if (v.kind.rfind("functor.", 0) != 0)
            out.add(v.kind, v.detail);
    return out;
}

}  // namespace

ValidationReport is_biexact(const BiFunctor& F) {
    ValidationReport rep = validate_bifunctor(F);
    if (!well_typed(rep))
        return rep;
    const FinCofCategory& L = *F.left;
    const FinCofCategory& R = *F.right;
    const FinCofCategory& T = *F.target;
    for (ObjId a = 0; a < L.base.num_objects(); ++a)
        rep.merge(exactness_only(F.partial_left(a)), "condition (1), F(" + L.base.object_name(a) + ", -)");
    for (ObjId b = 0; b < R.base.num_objects(); ++b)
        rep.merge(exactness_only(F.partial_right(b)), "condition (1), F(-, " + R.base.object_name(b) + ")");

    for (MorId c = 0; c < L.base.num_morphisms(); ++c) {
        if (!L.is_cofibration(c))
            continue;
        for (MorId d = 0; d < R.base.num_morphisms(); ++d) {
            if (!R.is_cofibration(d))
                continue;
            const ObjId C0 = L.base.src(c), C1 = L.base.dst(c);
            const ObjId D0 = R.base.src(d), D1 = R.base.dst(d);
            const MorId x = F.mor(c, R.base.identity(D0));  // F(C,D) → F(C',D)
            const MorId y = F.mor(L.base.identity(C0), d);  // F(C,D) → F(C,D')
            const std::string pair =
                "(" + L.base.morphism_name(c) + ", " + R.base.morphism_name(d) + ")";
            if (!T.is_cofibration(x))
                continue;  // already reported under condition (1)
            const PushoutWitness* w = T.witness(x, y);
            if (!w) {
                rep.add("biexact.witness-missing",
                        "condition (2): no pushout witness for cofibration pair " + pair);
                continue;
            }
            const MorId v = F.mor(L.base.identity(C1), d);  // F(C',D) → F(C',D')
            const MorId u = F.mor(c, R.base.identity(D1));  // F(C,D') → F(C',D')
            auto m = mediating_morphism(T.base, *w, v, u);
            if (!m)
                rep.add("biexact.corner", "condition (2): no unique corner map for pair " + pair);
            else if (!T.is_cofibration(*m))
                rep.add("biexact.corner", "condition (2): corner map " + T.base.morphism_name(*m) +
                                              " for pair " + pair + " is not a cofibration");
        }
    }
    return rep;
}

}  // namespace waldkit
