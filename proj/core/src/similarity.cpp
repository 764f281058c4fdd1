#include "canonform/similarity.hpp"

namespace canonform {

namespace {

Matrix square_over_q(const Matrix& a, const char* what) {
    if (a.ring() == Ring::QX) throw Error(ErrorKind::UnsupportedRing, std::string(what) + " needs a matrix over Q");
    if (!a.is_square())
        throw Error(ErrorKind::NotSquare, std::string(what) + " of a " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()) + " matrix");
    return lift(a, Ring::Q);
}

Matrix block_sum(const std::vector<Matrix>& blocks) {
    Matrix out = blocks.front();
    for (std::size_t k = 1; k < blocks.size(); ++k) out = direct_sum(out, blocks[k]);
    return out;
}

Elem power(const Elem& base, unsigned exponent) {
    Elem out = Elem::one(base.ring());
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

SimilarityCertificate conjugate_to(const Matrix& a, const Matrix& target) {
    auto cert = similar(a, target);
    if (!cert) throw Error(ErrorKind::Internal, "canonical form is not similar to its source");
    return std::move(*cert);
}

}  // namespace

Matrix char_matrix(const Matrix& a_in) {
    const Matrix a = square_over_q(a_in, "characteristic matrix");
    const std::size_t n = a.rows();
    Matrix out(Ring::QX, n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            Polynomial e(-a(i, j).as_rat());
            if (i == j) e += Polynomial::x();
            out(i, j) = Elem(std::move(e));
        }
    return out;
}

Polynomial char_poly(const Matrix& a) { return det(char_matrix(a)).as_poly(); }

Matrix CanonicalPresentation::to_matrix() const {
    const Matrix& first = coeffs.front();
    Matrix out(Ring::QX, first.rows(), first.cols());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        for (std::size_t i = 1; i <= first.rows(); ++i)
            for (std::size_t j = 1; j <= first.cols(); ++j) {
                const Rational& c = coeffs[k](i, j).as_rat();
                if (c != 0) out(i, j) += Elem(Polynomial::monomial(c, k));
            }
    return out;
}

CanonicalPresentation canonical_presentation(const Matrix& p_in) {
    const Matrix p = lift(p_in, Ring::QX);
    long top = 0;
    for (const Elem& e : p.entries()) top = std::max(top, e.as_poly().degree());
    CanonicalPresentation out;
    for (long k = 0; k <= top; ++k) {
        Matrix c(Ring::Q, p.rows(), p.cols());
        for (std::size_t i = 1; i <= p.rows(); ++i)
            for (std::size_t j = 1; j <= p.cols(); ++j) c(i, j) = Elem(p(i, j).as_poly().coeff(k));
        out.coeffs.push_back(std::move(c));
    }
    return out;
}

Matrix right_eval(const Matrix& p, const Matrix& a_in) {
    const Matrix a = square_over_q(a_in, "evaluation");
    if (p.cols() != a.rows()) throw Error(ErrorKind::ShapeMismatch, "right evaluation needs cols(P) = n");
    const auto pres = canonical_presentation(p);
    Matrix out = pres.coeffs.back();
    for (std::size_t k = pres.degree(); k-- > 0;) out = out * a + pres.coeffs[k];
    return out;
}

Matrix left_eval(const Matrix& p, const Matrix& a_in) {
    const Matrix a = square_over_q(a_in, "evaluation");
    if (p.rows() != a.rows()) throw Error(ErrorKind::ShapeMismatch, "left evaluation needs rows(P) = n");
    const auto pres = canonical_presentation(p);
    Matrix out = pres.coeffs.back();
    for (std::size_t k = pres.degree(); k-- > 0;) out = a * out + pres.coeffs[k];
    return out;
}

Matrix eval_poly(const Polynomial& q, const Matrix& a_in) {
    const Matrix a = square_over_q(a_in, "evaluation");
    const std::size_t n = a.rows();
    if (q.is_zero()) return Matrix::zero(Ring::Q, n, n);
    const Matrix id = Matrix::identity(Ring::Q, n);
    Matrix out = Elem(q.leading()) * id;
    for (long k = q.degree() - 1; k >= 0; --k) out = out * a + Elem(q.coeff(k)) * id;
    return out;
}

std::vector<Polynomial> similarity_invariants(const Matrix& a) {
    std::vector<Polynomial> out;
    for (const Elem& d : smith(char_matrix(a)).diag) out.push_back(d.as_poly());
    return out;
}

Polynomial minimal_poly(const Matrix& a) { return similarity_invariants(a).back(); }

Matrix companion(const Polynomial& q) {
    if (!q.is_monic()) throw Error(ErrorKind::NotMonic, "companion matrix of non-monic " + to_string(q));
    if (q.degree() < 1) throw Error(ErrorKind::InvalidArgument, "companion matrix needs degree >= 1");
    const auto k = static_cast<std::size_t>(q.degree());
    Matrix c(Ring::Q, k, k);
    for (std::size_t i = 1; i < k; ++i) c(i, i + 1) = Elem::one(Ring::Q);
    for (std::size_t j = 1; j <= k; ++j) c(k, j) = Elem(Rational(-q.coeff(j - 1)));
    return c;
}

Matrix hypercompanion(const Rational& alpha, std::size_t k) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "hypercompanion block needs k >= 1");
    Matrix h(Ring::Q, k, k);
    for (std::size_t i = 1; i <= k; ++i) {
        h(i, i) = Elem(alpha);
        if (i < k) h(i, i + 1) = Elem::one(Ring::Q);
    }
    return h;
}

bool verify(const Matrix& a_in, const SimilarityCertificate& cert) {
    const Matrix a = square_over_q(a_in, "similarity check");
    const std::size_t n = a.rows();
    auto fits = [n](const Matrix& m) { return m.ring() == Ring::Q && m.rows() == n && m.cols() == n; };
    if (!fits(cert.s) || !fits(cert.s_inv) || !fits(cert.target)) return false;
    return cert.s * cert.s_inv == Matrix::identity(Ring::Q, n) && cert.s_inv * a * cert.s == cert.target;
}

std::optional<SimilarityCertificate> similar(const Matrix& a_in, const Matrix& b_in) {
    const Matrix a = square_over_q(a_in, "similarity");
    const Matrix b = square_over_q(b_in, "similarity");
    if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "similarity needs matrices of the same order");
    const SmithResult sa = smith(char_matrix(a));
    const SmithResult sb = smith(char_matrix(b));
    if (sa.diag != sb.diag) return std::nullopt;
    // (xI - A) Q_A Q_B^-1 = P_A^-1 P_B (xI - B), so S = rho_B(Q_A Q_B^-1)
    // satisfies A S = S B, and rho_A(Q_B Q_A^-1) is its inverse.
    SimilarityCertificate cert{right_eval(sa.q * sb.q_inv, b), right_eval(sb.q * sa.q_inv, a), b};
    if (!verify(a, cert)) throw Error(ErrorKind::Internal, "similarity certificate failed to replay");
    return cert;
}

std::vector<PrimePower> similarity_elementary_divisors(const Matrix& a) {
    return elementary_divisors_of(smith(char_matrix(a)).diag);
}

SimilarityCertificate rcf(const Matrix& a) {
    std::vector<Matrix> blocks;
    for (const PrimePower& pp : similarity_elementary_divisors(a))
        blocks.push_back(companion(power(pp.prime, pp.exponent).as_poly()));
    return conjugate_to(a, block_sum(blocks));
}

SimilarityCertificate jordan(const Matrix& a) {
    std::vector<Matrix> blocks;
    for (const PrimePower& pp : similarity_elementary_divisors(a)) {
        const Polynomial& p = pp.prime.as_poly();
        if (p.degree() != 1) {
            std::string name = to_string(p);
            if (pp.exponent > 1) name = "(" + name + ")^" + std::to_string(pp.exponent);
            throw Error(ErrorKind::NonLinearElementaryDivisor,
                        "elementary divisor " + name + " is not a power of a linear polynomial over Q");
        }
        blocks.push_back(hypercompanion(-p.coeff(0), pp.exponent));
    }
    return conjugate_to(a, block_sum(blocks));
}

}  // namespace canonform
