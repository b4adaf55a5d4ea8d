#pragma once

#include <memory>
#include <vector>

#include "thetasphere/element.hpp"

namespace thetasphere {

/// Rectangular matrix with FormElement entries.
class MatrixForm {
public:
    MatrixForm() = default;
    MatrixForm(const ManifoldSpec& spec, int rows, int cols);

    static MatrixForm identity(const ManifoldSpec& spec, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const ManifoldSpec* spec() const { return spec_; }

    FormElement& at(int i, int j) { return entries_[i * cols_ + j]; }
    const FormElement& at(int i, int j) const { return entries_[i * cols_ + j]; }

    MatrixForm operator+(const MatrixForm& o) const;
    MatrixForm operator-(const MatrixForm& o) const;
    MatrixForm operator*(const MatrixForm& o) const;
    MatrixForm scale(const Coefficient& c) const;
    bool operator==(const MatrixForm& o) const;

    /// entrywise star plus transpose
    MatrixForm adjoint() const;
    FormElement trace() const;
    /// entrywise exterior derivative
    MatrixForm d_entrywise() const;
    /// entrywise canonical representative mod the ambient ideal
    MatrixForm reduce() const;
    bool is_zero() const;
    /// reduces entries first; the ideal-class zero test
    bool reduces_to_zero() const;
    std::string render() const;

private:
    const ManifoldSpec* spec_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<FormElement> entries_;
};

/// The Hopf instanton data: the frame of generators over the total space and
/// the basic projection over the base.
struct InstantonData {
    std::shared_ptr<const ManifoldSpec> total; // seven-sphere type spec
    std::shared_ptr<const ManifoldSpec> base;  // four-sphere type spec
    MatrixForm hopf_frame;                     // 4x2 over total, u*u = 1
    MatrixForm projection;                     // 4x4 over base,  p^2 = p = p*
};

/// Builds u and p for a spec carrying an instanton block (either role).
InstantonData build_instanton_data(std::shared_ptr<const ManifoldSpec> spec,
                                   const std::string& origin_path = "");

/// Generator-image homomorphism between specs (the base-to-total inclusion).
class AlgebraMorphism {
public:
    AlgebraMorphism(const ManifoldSpec& from, const ManifoldSpec& to,
                    std::vector<AlgebraElement> images);
    AlgebraElement apply(const AlgebraElement& a) const;

    /// the standard inclusion of the instanton base into the total space
    static AlgebraMorphism hopf_inclusion(const InstantonData& data);

private:
    const ManifoldSpec* from_;
    const ManifoldSpec* to_;
    std::vector<AlgebraElement> images_;
};

/// Grassmann connection applied to a column section: p d(xi), reduced.
MatrixForm grassmann_apply(const MatrixForm& projection, const MatrixForm& section);

/// F = p dp dp, reduced.
MatrixForm curvature(const MatrixForm& projection);

/// curvature of the shifted connection p d + alpha: F + p(d alpha)p + alpha^2
MatrixForm curvature_with_potential(const MatrixForm& projection, const MatrixForm& alpha);

/// alpha^U = -(p' dU p)U* + U alpha U*, where p' = U U* (the target
/// projection; equals p for endomorphism unitaries).
MatrixForm gauge_transform_form(const MatrixForm& alpha, const MatrixForm& unitary,
                                const MatrixForm& projection);

/// lifted endomorphism connection: p (dT) p for T = pTp
MatrixForm lifted_commutator(const MatrixForm& projection, const MatrixForm& endo);

} // namespace thetasphere
