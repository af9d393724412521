#include "wittbundle/pairing.hpp"

namespace witt {

std::pair<Mat2, Mat2> pair_LM(const Rat& lambda1, const Rat& lambda2,
                              const Rat& lambda3, const Rat& c) {
    for (const Rat* l : {&lambda1, &lambda2, &lambda3}) {
        if (*l == 0 || *l == 1 || *l == -1)
            throw DomainError("pair_LM needs lambda outside {0,1,-1}");
    }
    if (c == 0) throw DomainError("pair_LM needs c != 0");
    Rat t1 = lambda1 + 1 / lambda1;
    Rat t2 = lambda2 + 1 / lambda2;
    Rat t3 = lambda3 + 1 / lambda3;
    if (t1 * t1 + t2 * t2 + t3 * t3 - t1 * t2 * t3 == 4)
        throw DomainError("traces satisfy M_4; no such pair exists");
    Rat a = (lambda3 * t1 - t2) / (lambda3 - 1 / lambda3);
    Rat d = -(a * a - t1 * a + 1) / c;
    Mat2 L(a, d, c, t1 - a);
    Mat2 M = L.inverse() * Mat2::diagonal(lambda3);
    if (M.trace() != t2) throw InternalError("pair_LM trace drifted");
    return {std::move(L), std::move(M)};
}

Mat2 conjugator_to(const Mat2& L, const Rat& lambda) {
    if (lambda == 0 || lambda == 1 || lambda == -1)
        throw DomainError("conjugator needs lambda outside {0,1,-1}");
    Rat li = Rat(1) / lambda;
    if (L.trace() != lambda + li)
        throw DomainError("lambda is not an eigenvalue of L");
    Mat2 D = Mat2::diagonal(lambda);
    if (L == D) return Mat2::identity();
    Mat2 A;
    if (L.a21() != 0) {
        // Columns: a lambda-eigenvector and a (1/lambda)-eigenvector,
        // scaled to determinant 1.
        Rat v1 = (lambda - L.a22()) / L.a21();
        Rat w1 = (li - L.a22()) / L.a21();
        Rat det = v1 - w1;  // = (lambda - 1/lambda)/L21 != 0
        A = Mat2(v1, w1 / det, Rat(1), Rat(1) / det);
    } else if (L.a11() == lambda) {
        Rat w1 = -L.a12() / (lambda - li);
        A = Mat2(Rat(1), w1, Rat(0), Rat(1));
    } else {
        Rat w1 = L.a12() / (lambda - li);
        A = Mat2(w1, Rat(-1), Rat(1), Rat(0));
    }
    if (conj(A, D) != L) throw InternalError("conjugator drifted");
    return A;
}

}  // namespace witt
