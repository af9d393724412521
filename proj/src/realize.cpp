#include "wittbundle/realize.hpp"

#include <sstream>

#include "wittbundle/pairing.hpp"

namespace witt {

namespace {

// The boundary must be diag(l, 1/l) with l != +-1; returns l.
Rat diagonal_eigenvalue(const Mat2& w) {
    if (w.a12() != 0 || w.a21() != 0)
        throw DomainError("boundary is not diagonal");
    if (w.a11() == 1 || w.a11() == -1)
        throw DomainError("boundary is +-I");
    return w.a11();
}

}  // namespace

VeeStep vee_with_twists(const BoundedSurfaceRep& prev, const Genus1Block& block,
                        const Rat& alpha, const Rat& beta,
                        unsigned long lambda_seed) {
    if (alpha == 0 || beta == 0) throw DomainError("vee step needs alpha, beta != 0");
    Rat l1 = diagonal_eigenvalue(prev.boundary());
    Rat l2 = diagonal_eigenvalue(block.rep.boundary());
    if (l2 != block.z) throw DomainError("block boundary disagrees with its z");
    if (lambda_seed == 0) lambda_seed = 1;
    Rat t1 = l1 + 1 / l1;
    Rat t2 = l2 + 1 / l2;
    for (unsigned long lam = lambda_seed; lam < lambda_seed + 400; ++lam) {
        Rat lr(static_cast<long>(lam));
        Rat z = -alpha * beta * l1 * l2 * lr * lr;
        if (z == 0 || z == 1 || z == -1) continue;
        Rat t3 = z + 1 / z;
        if (t1 * t1 + t2 * t2 + t3 * t3 - t1 * t2 * t3 == 4) continue;
        Rat c = alpha * l1;
        auto [L, M] = pair_LM(l1, l2, z, c);
        Mat2 A = conjugator_to(L, l1);
        Mat2 B = conjugator_to(M, l2);
        BoundedSurfaceRep out = vee(twist_bounded(prev, A), twist_bounded(block.rep, B));
        if (out.boundary() != Mat2::diagonal(z))
            throw InternalError("vee boundary is not the expected diagonal");
        return {std::move(out), std::move(z), lam};
    }
    throw InternalError("no admissible lambda for vee step");
}

TargetDecomposition decompose_target(const WittClass& q, std::size_t genus) {
    if (genus < 2) throw DomainError("realization needs genus >= 2");
    if (!q.in_I2()) throw DomainError("target class is not in I^2");
    std::size_t budget = 4 * genus - 4;
    if (q.norm() > budget)
        throw NormBoundError("norm " + std::to_string(q.norm()) +
                             " exceeds the bound 4(g-1) = " + std::to_string(budget));
    std::vector<Rat> symbols;
    for (const auto& e : q.rep().entries()) symbols.emplace_back(e.value());
    if (symbols.size() % 4 != 0)
        throw InternalError("I^2 class with norm not divisible by 4");
    while (symbols.size() < budget) {
        symbols.emplace_back(1);
        symbols.emplace_back(-1);
    }
    // Real symbols fill the alpha/beta slots first; pads land in the
    // gamma/delta slots.
    TargetDecomposition out;
    for (std::size_t i = 0; i < genus; ++i)
        out.alpha_beta.emplace_back(symbols[2 * i], symbols[2 * i + 1]);
    for (std::size_t j = 0; j + 2 < genus; ++j)
        out.gamma_delta.emplace_back(symbols[2 * genus + 2 * j],
                                     symbols[2 * genus + 2 * j + 1]);
    Rat prod(1);
    for (const Rat& s : symbols) prod *= s;
    if (!is_rational_square(prod))
        throw InternalError("symbol product is not a square");
    return out;
}

RealizeResult realize(const WittClass& q, std::size_t genus) {
    TargetDecomposition dec = decompose_target(q, genus);
    const std::size_t g = genus;
    std::vector<std::string> log;
    unsigned long last_stage_seed = 1;
    for (int attempt = 0; attempt < 64; ++attempt) {
        log.clear();
        // The lambda freedom of the last stage before gluing (the single
        // block for g = 2, the last vee otherwise) absorbs exceptional z's.
        unsigned long accepted_last = 1;
        std::vector<Genus1Block> blocks;
        for (std::size_t i = 0; i + 1 < g; ++i) {
            const auto& [a, b] = dec.alpha_beta[i];
            unsigned long seed = (g == 2 && i == 0) ? last_stage_seed : 1;
            blocks.push_back(genus1_block(a, b, seed));
            if (g == 2 && i == 0) accepted_last = blocks.back().lambda;
            std::ostringstream os;
            os << "block[" << i + 1 << "](" << rat_to_string(a) << ","
               << rat_to_string(b) << "): lambda=" << blocks.back().lambda
               << " zeta=" << blocks.back().zeta;
            log.push_back(os.str());
        }
        BoundedSurfaceRep acc = blocks[0].rep;
        for (std::size_t j = 0; j + 2 < g; ++j) {
            const auto& [ga, de] = dec.gamma_delta[j];
            unsigned long seed = (j + 3 == g) ? last_stage_seed : 1;
            VeeStep step = vee_with_twists(acc, blocks[j + 1], ga, de, seed);
            if (j + 3 == g) accepted_last = step.lambda;
            std::ostringstream os;
            os << "vee[" << j + 2 << "](" << rat_to_string(ga) << ","
               << rat_to_string(de) << "): lambda=" << step.lambda;
            log.push_back(os.str());
            acc = std::move(step.rep);
        }
        Rat u = diagonal_eigenvalue(acc.boundary());
        const auto& [ag, bg] = dec.alpha_beta[g - 1];
        Rat a_last = -ag, b_last = -bg;
        if (!is_rational_square(u / (-a_last * b_last)))
            throw InternalError("forced eigenvalue left its square class");
        try {
            Genus1Block last = genus1_block_with_eigenvalue(a_last, b_last, u);
            std::ostringstream os;
            os << "block[" << g << "](" << rat_to_string(a_last) << ","
               << rat_to_string(b_last) << "): z forced, zeta=" << last.zeta;
            log.push_back(os.str());
            ClosedSurfaceRep closed = glue_closed(acc, last.rep);
            WittClass value = evaluate_closed(closed);
            if (value != q)
                throw InternalError("realized class disagrees with the target");
            return {std::move(closed), q, std::move(value), std::move(log)};
        } catch (const ExceptionalZError&) {
            last_stage_seed = accepted_last + 1;  // next lambda, new u
        }
    }
    throw InternalError("exceeded retry budget while avoiding exceptional z");
}

}  // namespace witt
