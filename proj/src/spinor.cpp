#include "kfg/spinor.hpp"

namespace kfg {

Multivector lr_action(Mask x, Mask y, Mask z, const CliffordPtr& alg) {
    const Cochain& F = alg->cochain();
    Scalar c = F(x, y) * F(x ^ y, z) * Scalar::i_power(rho(y));
    if (dot(y, z)) c = -c;
    return Multivector::blade(alg, x ^ y ^ z, std::move(c));
}

Mat lr_matrix(Mask x, Mask y, const CliffordPtr& alg) {
    int d = static_cast<int>(alg->dim());
    Mat m(d, d);
    for (Mask z = 0; z < alg->dim(); ++z) {
        Multivector img = lr_action(x, y, z, alg);
        for (const auto& [w, c] : img.coeffs()) m.at(int(w), int(z)) = c;
    }
    return m;
}

std::vector<Mat> generator_matrices(const CliffordPtr& alg) {
    std::vector<Mat> out;
    for (int i = 0; i < alg->n(); ++i)
        out.push_back(lr_matrix(Mask{1} << i, 0, alg));
    for (int i = 0; i < alg->n(); ++i)
        out.push_back(lr_matrix(0, Mask{1} << i, alg));
    return out;
}

bool full_rep_faithfulness(const CliffordPtr& alg) {
    if (alg->n() > 3) throw error("faithfulness rank check capped at n <= 3");
    int d = static_cast<int>(alg->dim());
    Mat stack(d * d, d * d);  // row = (x, y) pair, col = matrix entry
    for (Mask x = 0; x < alg->dim(); ++x)
        for (Mask y = 0; y < alg->dim(); ++y) {
            Mat m = lr_matrix(x, y, alg);
            for (int e = 0; e < d * d; ++e)
                stack.at(int(x) * d + int(y), e) = m.data()[size_t(e)];
        }
    return rank(std::move(stack)) == d * d;
}

Multivector exterior_model_action(int a, const Multivector& w) {
    auto alg = std::dynamic_pointer_cast<const CliffordAlgebra>(w.algebra());
    if (!alg) throw error("exterior model needs a Clifford algebra");
    int n = alg->n();
    if (a < 1 || a > 2 * n) throw error("generator index out of range");
    bool second = a > n;
    int i = second ? a - n - 1 : a - 1;
    Mask bit = Mask{1} << i;

    Multivector out(w.algebra());
    for (const auto& [x, c] : w.coeffs()) {
        int sign = std::popcount(x & (bit - 1)) & 1 ? -1 : 1;
        Scalar v;
        if (!(x & bit)) {
            // wedge raises the bit
            v = sign < 0 ? -c : c;
            if (second) v *= Scalar::i();
        } else {
            // interior lowers it, with the q-norm
            v = (sign < 0 ? -c : c) * alg->q(i);
            v = second ? -Scalar::i() * v : v;
        }
        out.add_term(x ^ bit, v);
    }
    return out;
}

Mat exterior_model_matrix(int a, const CliffordPtr& alg) {
    int d = static_cast<int>(alg->dim());
    Mat m(d, d);
    for (Mask z = 0; z < alg->dim(); ++z) {
        Multivector img = exterior_model_action(a, Multivector::blade(alg, z));
        for (const auto& [w, c] : img.coeffs()) m.at(int(w), int(z)) = c;
    }
    return m;
}

GradingOperator grading_operator(const CliffordPtr& alg) {
    int n = alg->n();
    Scalar lambda = Scalar::i_power(n);
    if ((n * (n - 1) / 2) % 2) lambda = -lambda;
    for (const auto& qi : alg->signature().q) lambda *= qi;
    Mask top = alg->gamma_mask();
    return {lr_matrix(top, top, alg), lambda};
}

Mat odd_extend(const std::vector<Mat>& gens, const CliffordPtr& alg,
               const Scalar& q) {
    Scalar lambda;
    if (q == Scalar(1))
        lambda = Scalar(1);
    else if (q == Scalar(-1))
        lambda = Scalar::i();
    else
        throw error("odd extension requires q in {1, -1}");
    int d = static_cast<int>(alg->dim());
    Mat m(d, d);
    for (Mask z = 0; z < alg->dim(); ++z)
        m.at(int(z), int(z)) = rho(z) & 1 ? -lambda : lambda;
    if (m * m != q * Mat::identity(d))
        throw error("odd extension square check failed");
    for (const Mat& g : gens)
        if (!(m * g + g * m).is_zero())
            throw error("odd extension does not anticommute with the generators");
    return m;
}

Rep spinor_rep(const CliffordPtr& alg, std::optional<Scalar> odd_q) {
    Rep r;
    r.dim = static_cast<int>(alg->dim());
    r.gens = generator_matrices(alg);
    r.q = alg->signature().q;
    r.q.insert(r.q.end(), alg->signature().q.begin(), alg->signature().q.end());
    if (odd_q) {
        r.gens.push_back(odd_extend(r.gens, alg, *odd_q));
        r.q.push_back(*odd_q);
    }
    return r;
}

}  // namespace kfg
