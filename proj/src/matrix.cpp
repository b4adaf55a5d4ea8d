#include "thetasphere/matrix.hpp"

#include "thetasphere/errors.hpp"

namespace thetasphere {

MatrixForm::MatrixForm(const ManifoldSpec& spec, int rows, int cols)
    : spec_(&spec), rows_(rows), cols_(cols),
      entries_(static_cast<size_t>(rows) * cols, FormElement::zero(spec)) {}

MatrixForm MatrixForm::identity(const ManifoldSpec& spec, int n) {
    MatrixForm m(spec, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FormElement::unit(spec);
    return m;
}

MatrixForm MatrixForm::operator+(const MatrixForm& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
    MatrixForm r(*spec_, rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + o.entries_[k];
    return r;
}

MatrixForm MatrixForm::operator-(const MatrixForm& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
    MatrixForm r(*spec_, rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] - o.entries_[k];
    return r;
}

MatrixForm MatrixForm::operator*(const MatrixForm& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product dimension mismatch");
    MatrixForm r(*spec_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            FormElement acc = FormElement::zero(*spec_);
            for (int k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

MatrixForm MatrixForm::scale(const Coefficient& c) const {
    MatrixForm r(*spec_, rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].scale(c);
    return r;
}

bool MatrixForm::operator==(const MatrixForm& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && [&] {
        for (size_t k = 0; k < entries_.size(); ++k)
            if (!(entries_[k] == o.entries_[k])) return false;
        return true;
    }();
}

MatrixForm MatrixForm::adjoint() const {
    MatrixForm r(*spec_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).star();
    return r;
}

FormElement MatrixForm::trace() const {
    if (rows_ != cols_) throw DimensionError("trace of a non-square matrix");
    FormElement acc = FormElement::zero(*spec_);
    for (int i = 0; i < rows_; ++i) acc = acc + at(i, i);
    return acc;
}

MatrixForm MatrixForm::d_entrywise() const {
    MatrixForm r(*spec_, rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].exterior_d();
    return r;
}

MatrixForm MatrixForm::reduce() const {
    MatrixForm r(*spec_, rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].reduce();
    return r;
}

bool MatrixForm::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool MatrixForm::reduces_to_zero() const {
    for (const auto& e : entries_)
        if (!e.reduce().is_zero()) return false;
    return true;
}

std::string MatrixForm::render() const {
    std::string s = "[";
    for (int i = 0; i < rows_; ++i) {
        if (i) s += "; ";
        for (int j = 0; j < cols_; ++j) {
            if (j) s += ", ";
            s += at(i, j).render();
        }
    }
    return s + "]";
}

// ------------------------------------------------------------- instanton

namespace {

FormElement gen_form(const ManifoldSpec& spec, const std::string& name,
                     Coefficient c = Coefficient::one()) {
    int g = spec.generator_index(name);
    if (g < 0) throw SpecError("instanton block needs generator " + name);
    return FormElement::generator(spec, g).scale(c);
}

MatrixForm build_hopf_frame(const ManifoldSpec& total) {
    // the 4x2 arrangement of the total-space generators
    MatrixForm u(total, 4, 2);
    const Coefficient one = Coefficient::one();
    u.at(0, 0) = gen_form(total, "z1");
    u.at(0, 1) = gen_form(total, "z2s", -one);
    u.at(1, 0) = gen_form(total, "z2");
    u.at(1, 1) = gen_form(total, "z1s");
    u.at(2, 0) = gen_form(total, "z3");
    u.at(2, 1) = gen_form(total, "z4s", -one);
    u.at(3, 0) = gen_form(total, "z4");
    u.at(3, 1) = gen_form(total, "z3s");
    return u;
}

MatrixForm build_basic_projection(const ManifoldSpec& base) {
    const Coefficient half = Coefficient::rational(Rational(1, 2));
    const Coefficient mhalf = -half;
    const Coefficient mu = Coefficient::mu(1), mub = Coefficient::mu(-1);
    FormElement one = FormElement::unit(base);
    FormElement x0 = gen_form(base, "x0");
    MatrixForm p(base, 4, 4);
    FormElement diag_plus = (one + x0).scale(half);
    FormElement diag_minus = (one - x0).scale(half);
    p.at(0, 0) = diag_plus;
    p.at(1, 1) = diag_plus;
    p.at(2, 2) = diag_minus;
    p.at(3, 3) = diag_minus;
    p.at(0, 2) = gen_form(base, "x1", half);
    p.at(0, 3) = gen_form(base, "x2s", mhalf * mub);
    p.at(1, 2) = gen_form(base, "x2", half);
    p.at(1, 3) = gen_form(base, "x1s", half * mu);
    p.at(2, 0) = gen_form(base, "x1s", half);
    p.at(2, 1) = gen_form(base, "x2s", half);
    p.at(3, 0) = gen_form(base, "x2", mhalf * mu);
    p.at(3, 1) = gen_form(base, "x1", half * mub);
    return p;
}

} // namespace

InstantonData build_instanton_data(std::shared_ptr<const ManifoldSpec> spec,
                                   const std::string& origin_path) {
    if (!spec) throw SpecError("null spec");
    if (!spec->instanton) throw SpecError("spec '" + spec->name + "' has no instanton block");
    InstantonData data;
    if (spec->instanton->role == "base") {
        data.base = spec;
        data.total = spec->load_partner(origin_path);
    } else {
        data.total = spec;
        data.base = spec->load_partner(origin_path);
    }
    if (!data.base->ambient)
        throw SpecError("instanton base spec needs an ambient frame");
    data.hopf_frame = build_hopf_frame(*data.total);
    data.projection = build_basic_projection(*data.base);
    return data;
}

AlgebraMorphism::AlgebraMorphism(const ManifoldSpec& from, const ManifoldSpec& to,
                                 std::vector<AlgebraElement> images)
    : from_(&from), to_(&to), images_(std::move(images)) {
    if (images_.size() != static_cast<size_t>(from.n_generators()))
        throw SpecError("morphism needs one image per generator");
}

AlgebraElement AlgebraMorphism::apply(const AlgebraElement& a) const {
    AlgebraElement out = AlgebraElement::zero(*to_);
    for (const auto& [w, c] : a.terms()) {
        AlgebraElement prod = AlgebraElement::unit(*to_).scale(c);
        for (unsigned char l : w) prod = prod * images_[l];
        out = out + prod;
    }
    return out;
}

AlgebraMorphism AlgebraMorphism::hopf_inclusion(const InstantonData& data) {
    const ManifoldSpec& base = *data.base;
    const ManifoldSpec& total = *data.total;
    auto g = [&](const std::string& n) { return AlgebraElement::generator(total, n); };
    const Coefficient two = Coefficient::rational(2);
    // x1 = 2(z1 z3* + z2* z4), x2 = 2(z2 z3* - z1* z4),
    // x0 = z1 z1* + z2 z2* - z3 z3* - z4 z4*
    AlgebraElement x1 = (g("z1") * g("z3s") + g("z2s") * g("z4")).scale(two);
    AlgebraElement x2 = (g("z2") * g("z3s") - g("z1s") * g("z4")).scale(two);
    AlgebraElement x0 = g("z1") * g("z1s") + g("z2") * g("z2s") - g("z3") * g("z3s") -
                        g("z4") * g("z4s");
    std::vector<AlgebraElement> images(base.n_generators(), AlgebraElement::zero(total));
    images[base.generator_index("x0")] = x0;
    images[base.generator_index("x1")] = x1;
    images[base.generator_index("x1s")] = x1.star();
    images[base.generator_index("x2")] = x2;
    images[base.generator_index("x2s")] = x2.star();
    return AlgebraMorphism(base, total, std::move(images));
}

// ------------------------------------------------------------ connections

MatrixForm grassmann_apply(const MatrixForm& projection, const MatrixForm& section) {
    if (projection.cols() != section.rows())
        throw DimensionError("section length does not match the projection");
    if (!((projection * section - section).reduces_to_zero()))
        throw PreconditionError("section is not in the module: p xi != xi");
    return (projection * section.d_entrywise()).reduce();
}

MatrixForm curvature(const MatrixForm& projection) {
    MatrixForm dp = projection.d_entrywise();
    return (projection * dp * dp).reduce();
}

MatrixForm curvature_with_potential(const MatrixForm& projection, const MatrixForm& alpha) {
    MatrixForm f0 = curvature(projection);
    MatrixForm da = (projection * alpha.d_entrywise() * projection).reduce();
    MatrixForm a2 = (alpha * alpha).reduce();
    return (f0 + da + a2).reduce();
}

MatrixForm gauge_transform_form(const MatrixForm& alpha, const MatrixForm& unitary,
                                const MatrixForm& projection) {
    const MatrixForm& p = projection;
    const MatrixForm& u = unitary;
    MatrixForm ustar = u.adjoint();
    MatrixForm target = (u * ustar).reduce(); // p' = U U*
    if (!((ustar * u - p).reduces_to_zero()))
        throw PreconditionError("gauge transformation is not unitary: U*U != p");
    if (!((u * p - u).reduces_to_zero()) || !((target * u - u).reduces_to_zero()))
        throw PreconditionError("gauge transformation does not respect the module");
    if (!((alpha.adjoint() + alpha).reduces_to_zero()))
        throw PreconditionError("connection form is not skew-adjoint");
    if (!((p * alpha * p - alpha).reduces_to_zero()))
        throw PreconditionError("connection form is not pinched by the projection");
    MatrixForm lifted = (target * u.d_entrywise() * p).reduce();
    return ((lifted * ustar).scale(-Coefficient::one()) + u * alpha * ustar).reduce();
}

MatrixForm lifted_commutator(const MatrixForm& projection, const MatrixForm& endo) {
    if (!((projection * endo * projection - endo).reduces_to_zero()))
        throw PreconditionError("not an endomorphism of the module: pTp != T");
    return (projection * endo.d_entrywise() * projection).reduce();
}

} // namespace thetasphere
