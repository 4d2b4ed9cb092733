#include "transversal/groebner.hpp"

#include <algorithm>
#include <set>

namespace transversal {

Ordering compare_mod_terms(const ModTerm& a, const ModTerm& b, const ModuleOrder& ord)
{
    if (ord.style == ModuleOrder::Style::PositionOverTerm) {
        if (a.comp != b.comp)
            return a.comp < b.comp ? Ordering::Greater : Ordering::Less;
        return compare_monomials(a.mono, b.mono, ord.base);
    }
    Ordering m = compare_monomials(a.mono, b.mono, ord.base);
    if (m != Ordering::Equal)
        return m;
    if (a.comp != b.comp)
        return a.comp < b.comp ? Ordering::Greater : Ordering::Less;
    return Ordering::Equal;
}

namespace {

struct TermDesc {
    ModuleOrder ord;
    bool operator()(const ModTerm& a, const ModTerm& b) const
    {
        return compare_mod_terms(a, b, ord) == Ordering::Greater;
    }
};

// Working representation: terms sorted with the leading term first.
using WVec = std::map<ModTerm, Rational, TermDesc>;

WVec to_wvec(const FreeModuleElem& e, const TermDesc& cmp)
{
    WVec v(cmp);
    for (std::size_t c = 0; c < e.rank(); ++c)
        for (const auto& [m, coeff] : e[c].terms())
            v.emplace(ModTerm{m, static_cast<int>(c)}, coeff);
    return v;
}

FreeModuleElem to_elem(const WVec& v, const RingPtr& ring, std::size_t rank)
{
    std::vector<PolynomialBuilder> builders;
    builders.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i)
        builders.emplace_back(ring);
    for (const auto& [t, c] : v)
        builders[static_cast<std::size_t>(t.comp)].add(t.mono, c);
    std::vector<Polynomial> comps;
    comps.reserve(rank);
    for (auto& b : builders)
        comps.push_back(b.take());
    FreeModuleElem e(ring, rank);
    for (std::size_t i = 0; i < rank; ++i)
        e[i] = comps[i];
    return e;
}

// dst += c * m * src
void add_scaled(WVec& dst, const WVec& src, const Monomial& m, const Rational& c)
{
    for (const auto& [t, coeff] : src) {
        ModTerm key{t.mono * m, t.comp};
        auto it = dst.find(key);
        if (it == dst.end()) {
            Rational v = coeff * c;
            if (sgn(v) != 0)
                dst.emplace(std::move(key), std::move(v));
        } else {
            it->second += coeff * c;
            if (sgn(it->second) == 0)
                dst.erase(it);
        }
    }
}

void scale(WVec& v, const Rational& c)
{
    for (auto& [t, coeff] : v)
        coeff *= c;
}

struct Engine {
    RingPtr ring;  // free ambient ring
    std::size_t rank;
    ModuleOrder ord;
    TermDesc cmp;
    GBOptions opts;
    bool trackReps = false;
    std::size_t nInputs = 0;

    std::vector<WVec> basis;
    std::vector<ModTerm> leads;
    std::vector<FreeModuleElem> reps;  // over A^{nInputs}

    Engine(RingPtr r, std::size_t rk, ModuleOrder o, GBOptions op)
        : ring(std::move(r)), rank(rk), ord(o), cmp{o}, opts(op)
    {
    }

    void check_cancel() const
    {
        if (opts.cancel && opts.cancel->load(std::memory_order_relaxed))
            throw CancelledError("groebner computation cancelled");
    }

    // Full normal form; `quots` (when given) receives, per basis index,
    // the coefficient polynomial used, so that input = sum + remainder.
    WVec reduce_full(WVec f, std::vector<Polynomial>* quots) const
    {
        WVec rem(cmp);
        while (!f.empty()) {
            const ModTerm lead = f.begin()->first;
            const Rational lc = f.begin()->second;
            bool reduced = false;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (leads[k].comp != lead.comp || !leads[k].mono.divides(lead.mono))
                    continue;
                Monomial q = lead.mono / leads[k].mono;
                // basis is monic: coefficient of the step is lc itself
                add_scaled(f, basis[k], q, -lc);
                if (quots)
                    (*quots)[k] += Polynomial::term(ring, q, lc);
                reduced = true;
                break;
            }
            if (!reduced) {
                rem.emplace(lead, lc);
                f.erase(f.begin());
            }
        }
        return rem;
    }

    void make_monic(WVec& v, FreeModuleElem* rep) const
    {
        if (v.empty())
            return;
        Rational lc = v.begin()->second;
        if (lc == 1)
            return;
        Rational inv = Rational(1) / lc;
        scale(v, inv);
        if (rep)
            *rep = rep->scaled(Polynomial::constant(ring, inv));
    }

    struct Pair {
        long deg;
        Monomial lcmMono;
        int i, j;
        bool operator<(const Pair& o) const
        {
            if (deg != o.deg)
                return deg < o.deg;
            if (lcmMono != o.lcmMono)
                return lcmMono < o.lcmMono;
            if (i != o.i)
                return i < o.i;
            return j < o.j;
        }
    };

    std::set<Pair> queue;
    std::set<std::pair<int, int>> pending;

    void push_pairs_for(int newIndex)
    {
        for (int k = 0; k < newIndex; ++k) {
            if (leads[static_cast<std::size_t>(k)].comp !=
                leads[static_cast<std::size_t>(newIndex)].comp)
                continue;
            Monomial L = lcm(leads[static_cast<std::size_t>(k)].mono,
                             leads[static_cast<std::size_t>(newIndex)].mono);
            queue.insert(Pair{L.degree(), L, k, newIndex});
            pending.insert({k, newIndex});
        }
    }

    void add_element(WVec v, FreeModuleElem rep)
    {
        make_monic(v, trackReps ? &rep : nullptr);
        leads.push_back(v.begin()->first);
        basis.push_back(std::move(v));
        if (trackReps)
            reps.push_back(std::move(rep));
        push_pairs_for(static_cast<int>(basis.size()) - 1);
    }

    bool chain_criterion(const Pair& p) const
    {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            int ki = static_cast<int>(k);
            if (ki == p.i || ki == p.j)
                continue;
            if (leads[k].comp != leads[static_cast<std::size_t>(p.i)].comp)
                continue;
            if (!leads[k].mono.divides(p.lcmMono))
                continue;
            auto key1 = std::minmax(p.i, ki);
            auto key2 = std::minmax(p.j, ki);
            if (!pending.count({key1.first, key1.second}) &&
                !pending.count({key2.first, key2.second}))
                return true;
        }
        return false;
    }

    void run(const std::vector<FreeModuleElem>& inputs)
    {
        nInputs = inputs.size();
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            if (inputs[i].is_zero())
                continue;
            WVec v = to_wvec(inputs[i], cmp);
            FreeModuleElem rep =
                trackReps ? FreeModuleElem::basis(ring, nInputs, i) : FreeModuleElem();
            // interreduce the incoming generator against the current basis
            std::vector<Polynomial> quots;
            if (trackReps)
                quots.assign(basis.size(), Polynomial(ring));
            WVec nf = reduce_full(std::move(v), trackReps ? &quots : nullptr);
            if (nf.empty())
                continue;
            if (trackReps)
                for (std::size_t k = 0; k < basis.size(); ++k)
                    if (!quots[k].is_zero())
                        rep = rep - reps[k].scaled(quots[k]);
            add_element(std::move(nf), std::move(rep));
        }

        while (!queue.empty()) {
            check_cancel();
            Pair p = *queue.begin();
            queue.erase(queue.begin());
            pending.erase({p.i, p.j});

            const ModTerm& li = leads[static_cast<std::size_t>(p.i)];
            const ModTerm& lj = leads[static_cast<std::size_t>(p.j)];
            // Buchberger product criterion: sound for ring elements only.
            if (rank == 1 && coprime(li.mono, lj.mono))
                continue;
            if (chain_criterion(p))
                continue;

            Monomial qi = p.lcmMono / li.mono;
            Monomial qj = p.lcmMono / lj.mono;
            WVec s(cmp);
            add_scaled(s, basis[static_cast<std::size_t>(p.i)], qi, Rational(1));
            add_scaled(s, basis[static_cast<std::size_t>(p.j)], qj, Rational(-1));

            std::vector<Polynomial> quots;
            if (trackReps)
                quots.assign(basis.size(), Polynomial(ring));
            WVec h = reduce_full(std::move(s), trackReps ? &quots : nullptr);
            if (h.empty())
                continue;
            FreeModuleElem rep;
            if (trackReps) {
                rep = reps[static_cast<std::size_t>(p.i)].times_term(qi, Rational(1)) -
                      reps[static_cast<std::size_t>(p.j)].times_term(qj, Rational(1));
                for (std::size_t k = 0; k < basis.size(); ++k)
                    if (!quots[k].is_zero())
                        rep = rep - reps[k].scaled(quots[k]);
            }
            add_element(std::move(h), std::move(rep));
        }

        interreduce();
    }

    void interreduce()
    {
        const std::size_t n = basis.size();
        std::vector<bool> dropped(n, false);
        // equal leads cannot occur: every added element had an
        // irreducible lead at insertion time
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j || dropped[j])
                    continue;
                if (leads[j].comp == leads[i].comp && leads[j].mono.divides(leads[i].mono) &&
                    !(leads[j].mono == leads[i].mono && j > i)) {
                    dropped[i] = true;
                    break;
                }
            }
        }
        std::vector<WVec> kept;
        std::vector<ModTerm> keptLeads;
        std::vector<FreeModuleElem> keptReps;
        for (std::size_t i = 0; i < n; ++i) {
            if (dropped[i])
                continue;
            kept.push_back(std::move(basis[i]));
            keptLeads.push_back(leads[i]);
            if (trackReps)
                keptReps.push_back(std::move(reps[i]));
        }
        basis = std::move(kept);
        leads = std::move(keptLeads);
        if (trackReps)
            reps = std::move(keptReps);

        // tail-reduce each element against the others
        for (std::size_t i = 0; i < basis.size(); ++i) {
            WVec self = std::move(basis[i]);
            basis[i] = WVec(cmp);
            const ModTerm savedLead = leads[i];
            leads[i].comp = -1;  // mask self during reduction
            std::vector<Polynomial> quots;
            if (trackReps)
                quots.assign(basis.size(), Polynomial(ring));
            WVec nf = reduce_full(std::move(self), trackReps ? &quots : nullptr);
            if (trackReps)
                for (std::size_t k = 0; k < basis.size(); ++k)
                    if (!quots[k].is_zero())
                        reps[i] = reps[i] - reps[k].scaled(quots[k]);
            basis[i] = std::move(nf);
            leads[i] = savedLead;
        }

        // canonical ordering: decreasing leading term
        std::vector<std::size_t> idx(basis.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return compare_mod_terms(leads[a], leads[b], ord) == Ordering::Greater;
        });
        std::vector<WVec> sortedBasis;
        std::vector<ModTerm> sortedLeads;
        std::vector<FreeModuleElem> sortedReps;
        for (std::size_t k : idx) {
            sortedBasis.push_back(std::move(basis[k]));
            sortedLeads.push_back(leads[k]);
            if (trackReps)
                sortedReps.push_back(std::move(reps[k]));
        }
        basis = std::move(sortedBasis);
        leads = std::move(sortedLeads);
        if (trackReps)
            reps = std::move(sortedReps);
    }
};

RingPtr ambient_of(const RingPtr& ring)
{
    return ring->ambient();
}

std::vector<FreeModuleElem> lifted_inputs_with_relations(const std::vector<FreeModuleElem>& gens,
                                                         const RingPtr& ring, std::size_t rank)
{
    RingPtr amb = ambient_of(ring);
    std::vector<FreeModuleElem> lifted;
    lifted.reserve(gens.size() + ring->quotient_relations().size() * rank);
    for (const auto& g : gens) {
        if (g.rank() != rank)
            throw DimensionError("generator rank mismatch");
        lifted.push_back(lift_to_ambient(g));
    }
    for (const auto& q : ring->quotient_relations()) {
        for (std::size_t c = 0; c < rank; ++c) {
            FreeModuleElem row(amb, rank);
            row[c] = q;
            lifted.push_back(std::move(row));
        }
    }
    return lifted;
}

}  // namespace

std::vector<Polynomial> GroebnerBasis::polynomials() const
{
    if (rank != 1)
        throw DimensionError("polynomials(): basis has rank > 1");
    std::vector<Polynomial> ps;
    ps.reserve(elements.size());
    for (const auto& e : elements)
        ps.push_back(e[0]);
    return ps;
}

ModTerm leading_term(const FreeModuleElem& e, const ModuleOrder& ord)
{
    if (e.is_zero())
        throw InvalidArgumentError("leading term of zero element");
    bool have = false;
    ModTerm best;
    for (std::size_t c = 0; c < e.rank(); ++c) {
        for (const auto& [m, coeff] : e[c].terms()) {
            ModTerm t{m, static_cast<int>(c)};
            if (!have || compare_mod_terms(t, best, ord) == Ordering::Greater) {
                best = t;
                have = true;
            }
        }
    }
    return best;
}

Rational leading_coefficient(const FreeModuleElem& e, const ModuleOrder& ord)
{
    ModTerm t = leading_term(e, ord);
    return e[static_cast<std::size_t>(t.comp)].terms().at(t.mono);
}

GroebnerBasis buchberger_module(const std::vector<FreeModuleElem>& gens, const RingPtr& ring,
                                std::size_t rank, const ModuleOrder& ord, const GBOptions& opts)
{
    RingPtr amb = ambient_of(ring);
    Engine eng(amb, rank, ord, opts);
    eng.run(lifted_inputs_with_relations(gens, ring, rank));

    GroebnerBasis gb;
    gb.ring = ring;
    gb.order = ord;
    gb.rank = rank;
    gb.reduced = true;
    gb.elements.reserve(eng.basis.size());
    for (const auto& v : eng.basis)
        gb.elements.push_back(to_elem(v, amb, rank));
    return gb;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring,
                         const TermOrder& ord, const GBOptions& opts)
{
    std::vector<FreeModuleElem> elems;
    elems.reserve(gens.size());
    for (const auto& g : gens) {
        require_same_ring(g.ring(), ring, "buchberger");
        elems.push_back(FreeModuleElem::from_polynomial(g));
    }
    ModuleOrder mord{ord, ModuleOrder::Style::PositionOverTerm};
    return buchberger_module(elems, ring, 1, mord, opts);
}

FreeModuleElem normal_form(const FreeModuleElem& f, const GroebnerBasis& G)
{
    if (f.rank() != G.rank)
        throw DimensionError("normal_form: rank mismatch");
    RingPtr amb = ambient_of(G.ring);
    Engine eng(amb, G.rank, G.order, {});
    for (const auto& e : G.elements) {
        WVec v = to_wvec(e, eng.cmp);
        if (v.empty())
            continue;
        eng.make_monic(v, nullptr);
        eng.leads.push_back(v.begin()->first);
        eng.basis.push_back(std::move(v));
    }
    WVec nf = eng.reduce_full(to_wvec(lift_to_ambient(f), eng.cmp), nullptr);
    FreeModuleElem r = to_elem(nf, amb, G.rank);
    if (same_ring(G.ring, amb))
        return r;
    FreeModuleElem back(G.ring, G.rank);
    for (std::size_t c = 0; c < G.rank; ++c)
        back[c] = project_to_ring(r[c], G.ring);
    return back;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G)
{
    return normal_form(FreeModuleElem::from_polynomial(f), G)[0];
}

namespace {

const GroebnerBasis& quotient_relations_gb(const RingPtr& ring)
{
    {
        std::lock_guard<std::mutex> lock(ring->cache_mutex);
        if (ring->quotient_gb_cache)
            return *static_cast<const GroebnerBasis*>(ring->quotient_gb_cache.get());
    }
    auto gb = std::make_shared<GroebnerBasis>(
        buchberger(ring->quotient_relations(), ring->ambient(), ring->default_order()));
    std::lock_guard<std::mutex> lock(ring->cache_mutex);
    if (!ring->quotient_gb_cache)
        ring->quotient_gb_cache = std::shared_ptr<const void>(gb, gb.get());
    return *static_cast<const GroebnerBasis*>(ring->quotient_gb_cache.get());
}

}  // namespace

Polynomial reduce_mod_ring(const Polynomial& f)
{
    const RingPtr& ring = f.ring();
    if (!ring->is_quotient())
        return f;
    const GroebnerBasis& gb = quotient_relations_gb(ring);
    Polynomial nf = normal_form(lift_to_ambient(f), gb);
    return project_to_ring(nf, ring);
}

FreeModuleElem reduce_mod_ring(const FreeModuleElem& e)
{
    if (!e.ring()->is_quotient())
        return e;
    FreeModuleElem r(e.ring(), e.rank());
    for (std::size_t c = 0; c < e.rank(); ++c)
        r[c] = reduce_mod_ring(e[c]);
    return r;
}

Polynomial lift_to_ambient(const Polynomial& p)
{
    const RingPtr& ring = p.ring();
    if (!ring->is_quotient())
        return p;
    return Polynomial(ring->ambient(), p.terms());
}

FreeModuleElem lift_to_ambient(const FreeModuleElem& e)
{
    if (!e.ring()->is_quotient())
        return e;
    FreeModuleElem r(e.ring()->ambient(), e.rank());
    for (std::size_t c = 0; c < e.rank(); ++c)
        r[c] = lift_to_ambient(e[c]);
    return r;
}

Polynomial project_to_ring(const Polynomial& p, const RingPtr& ring)
{
    return Polynomial(ring, p.terms());
}

std::vector<FreeModuleElem> syzygy_generators(const std::vector<FreeModuleElem>& inputs,
                                              const RingPtr& ring, std::size_t rank,
                                              const ModuleOrder& ord, const GBOptions& opts)
{
    if (ring->is_quotient())
        throw InvalidArgumentError("syzygy_generators expects the free ambient ring");
    const std::size_t n = inputs.size();
    std::vector<FreeModuleElem> rows;

    std::vector<FreeModuleElem> nonzero;
    std::vector<std::size_t> originalIndex;
    for (std::size_t i = 0; i < n; ++i) {
        if (inputs[i].is_zero())
            rows.push_back(FreeModuleElem::basis(ring, n, i));  // trivial syzygy of a zero input
        else {
            nonzero.push_back(inputs[i]);
            originalIndex.push_back(i);
        }
    }
    if (nonzero.empty())
        return rows;

    Engine eng(ring, rank, ord, opts);
    eng.trackReps = true;
    eng.run(nonzero);

    const std::size_t s = eng.basis.size();
    const std::size_t m = nonzero.size();

    // reps are over A^m (indices into `nonzero`); widen to A^n at the end
    auto widen = [&](const FreeModuleElem& small) {
        FreeModuleElem wide(ring, n);
        for (std::size_t k = 0; k < m; ++k)
            wide[originalIndex[k]] = small[k];
        return wide;
    };

    // rows of (Id - Q H): input_i minus its expression through the basis
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Polynomial> quots(s, Polynomial(ring));
        WVec rem = eng.reduce_full(to_wvec(nonzero[i], eng.cmp), &quots);
        if (!rem.empty())
            throw Error("internal: generator did not reduce to zero against its own basis");
        FreeModuleElem row = FreeModuleElem::basis(ring, m, i);
        for (std::size_t k = 0; k < s; ++k)
            if (!quots[k].is_zero())
                row = row - eng.reps[k].scaled(quots[k]);
        if (!row.is_zero())
            rows.push_back(widen(row));
    }

    // Schreyer generators: lift every same-component S-pair over the
    // reduced basis and push it back through the representations.
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = i + 1; j < s; ++j) {
            if (eng.leads[i].comp != eng.leads[j].comp)
                continue;
            if (opts.cancel && opts.cancel->load(std::memory_order_relaxed))
                throw CancelledError("syzygy computation cancelled");
            Monomial L = lcm(eng.leads[i].mono, eng.leads[j].mono);
            Monomial qi = L / eng.leads[i].mono;
            Monomial qj = L / eng.leads[j].mono;
            WVec sp(eng.cmp);
            add_scaled(sp, eng.basis[i], qi, Rational(1));
            add_scaled(sp, eng.basis[j], qj, Rational(-1));
            std::vector<Polynomial> quots(s, Polynomial(ring));
            WVec rem = eng.reduce_full(std::move(sp), &quots);
            if (!rem.empty())
                throw Error("internal: S-pair of a Groebner basis did not reduce to zero");
            FreeModuleElem row = eng.reps[i].times_term(qi, Rational(1)) -
                                 eng.reps[j].times_term(qj, Rational(1));
            for (std::size_t k = 0; k < s; ++k)
                if (!quots[k].is_zero())
                    row = row - eng.reps[k].scaled(quots[k]);
            if (!row.is_zero())
                rows.push_back(widen(row));
        }
    }
    return rows;
}

}  // namespace transversal
