#include "treg/cycles/form.hpp"

#include <map>
#include <sstream>

#include "treg/error.hpp"

namespace treg::cycles {

namespace {

using cplx = std::complex<double>;

bool has(Leg l, Leg bit) { return (static_cast<unsigned>(l) & static_cast<unsigned>(bit)) != 0; }

// Positions 2j (dz_j) and 2j+1 (dz̄_j) of the legs present, in canonical order.
std::vector<int> positions(const std::vector<Leg>& legs) {
    std::vector<int> out;
    for (std::size_t j = 0; j < legs.size(); ++j) {
        if (has(legs[j], Leg::dz)) out.push_back(static_cast<int>(2 * j));
        if (has(legs[j], Leg::dzbar)) out.push_back(static_cast<int>(2 * j + 1));
    }
    return out;
}

std::pair<int, int> degree_of(const std::vector<Leg>& legs) {
    int p = 0, q = 0;
    for (Leg l : legs) {
        p += has(l, Leg::dz);
        q += has(l, Leg::dzbar);
    }
    return {p, q};
}

}  // namespace

void FormDescriptor::add_term(const std::vector<Leg>& legs, std::complex<double> c) {
    if (c == cplx(0)) return;
    if (!terms_.empty() && degree_of(terms_.front().legs) != degree_of(legs))
        fail(ErrorCode::invalid_argument, "form mixes bidegrees");
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
        if (it->legs == legs) {
            it->coefficient += c;
            if (it->coefficient == cplx(0)) terms_.erase(it);
            return;
        }
    terms_.push_back({c, legs});
}

FormDescriptor FormDescriptor::omega(std::size_t factors, std::size_t j) {
    FormDescriptor f(factors);
    std::vector<Leg> legs(factors, Leg::none);
    legs.at(j) = Leg::dz;
    f.add_term(legs, 1.0);
    return f;
}

FormDescriptor FormDescriptor::omega_bar(std::size_t factors, std::size_t j) { return omega(factors, j).conj(); }

FormDescriptor FormDescriptor::eta1(std::size_t factors, std::size_t a, std::size_t b) {
    return omega(factors, a).wedge(omega_bar(factors, b)) + omega_bar(factors, a).wedge(omega(factors, b));
}

FormDescriptor FormDescriptor::eta2(std::size_t factors, std::size_t a, std::size_t b) {
    return (omega(factors, a).wedge(omega_bar(factors, b)) - omega_bar(factors, a).wedge(omega(factors, b))) *
           cplx(0, 1);
}

FormDescriptor FormDescriptor::operator+(const FormDescriptor& o) const {
    if (o.factors_ != factors_) fail(ErrorCode::invalid_argument, "forms on different products");
    FormDescriptor out = *this;
    for (const auto& t : o.terms_) out.add_term(t.legs, t.coefficient);
    return out;
}

FormDescriptor FormDescriptor::operator*(std::complex<double> c) const {
    FormDescriptor out(factors_);
    for (const auto& t : terms_) out.add_term(t.legs, t.coefficient * c);
    return out;
}

FormDescriptor FormDescriptor::wedge(const FormDescriptor& o) const {
    if (o.factors_ != factors_) fail(ErrorCode::invalid_argument, "forms on different products");
    FormDescriptor out(factors_);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            std::vector<Leg> legs(factors_);
            bool clash = false;
            for (std::size_t j = 0; j < factors_; ++j) {
                if (static_cast<unsigned>(a.legs[j]) & static_cast<unsigned>(b.legs[j])) clash = true;
                legs[j] = static_cast<Leg>(static_cast<unsigned>(a.legs[j]) | static_cast<unsigned>(b.legs[j]));
            }
            if (clash) continue;
            // sign of the shuffle taking (legs of a, legs of b) to canonical order
            auto pa = positions(a.legs), pb = positions(b.legs);
            long inversions = 0;
            for (int x : pa)
                for (int y : pb)
                    if (x > y) ++inversions;
            double sign = (inversions % 2 == 0) ? 1.0 : -1.0;
            out.add_term(legs, a.coefficient * b.coefficient * sign);
        }
    return out;
}

FormDescriptor FormDescriptor::conj() const {
    FormDescriptor out(factors_);
    for (const auto& t : terms_) {
        std::vector<Leg> legs(factors_);
        for (std::size_t j = 0; j < factors_; ++j) {
            unsigned l = static_cast<unsigned>(t.legs[j]);
            legs[j] = static_cast<Leg>(((l & 1u) << 1) | ((l & 2u) >> 1));
        }
        // conjugate leg by leg in sequence, then count the swaps back to canonical order
        std::vector<int> conjugated;
        for (int p : positions(t.legs)) conjugated.push_back(p ^ 1);
        long inversions = 0;
        for (std::size_t x = 0; x < conjugated.size(); ++x)
            for (std::size_t y = x + 1; y < conjugated.size(); ++y)
                if (conjugated[x] > conjugated[y]) ++inversions;
        double sign = (inversions % 2 == 0) ? 1.0 : -1.0;
        out.add_term(legs, std::conj(t.coefficient) * sign);
    }
    return out;
}

std::pair<int, int> FormDescriptor::bidegree() const {
    if (terms_.empty()) return {0, 0};
    return degree_of(terms_.front().legs);
}

bool FormDescriptor::is_real(double eps) const {
    FormDescriptor diff = *this - conj();
    for (const auto& t : diff.terms_)
        if (std::abs(t.coefficient) > eps) return false;
    return true;
}

std::string FormDescriptor::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        os << (first ? "" : " + ") << "(" << t.coefficient.real() << (t.coefficient.imag() < 0 ? "-" : "+")
           << std::abs(t.coefficient.imag()) << "i)";
        for (std::size_t j = 0; j < t.legs.size(); ++j) {
            if (has(t.legs[j], Leg::dz)) os << " dz" << j + 1;
            if (has(t.legs[j], Leg::dzbar)) os << " dzb" << j + 1;
        }
        first = false;
    }
    return os.str();
}

bool restriction_vanishes(const FormDescriptor& form, const SubvarietyDescriptor& v) {
    if (form.factor_count() != v.factor_count())
        fail(ErrorCode::invalid_argument, "form and subvariety have different factor counts");
    const auto& slots = v.slots();
    for (const auto& t : form.terms()) {
        bool dies = false;
        std::map<std::string, std::pair<int, int>> group_legs;
        for (std::size_t j = 0; j < slots.size() && !dies; ++j) {
            Leg l = t.legs[j];
            if (l == Leg::none) continue;
            const Slot& s = slots[j];
            if (s.kind == SlotKind::point || (s.kind == SlotKind::group && !s.varies)) dies = true;
            else if (s.kind == SlotKind::group) {
                auto& [p, q] = group_legs[s.label];
                p += has(l, Leg::dz);
                q += has(l, Leg::dzbar);
                if (p > s.group_dim || q > s.group_dim) dies = true;
            }
        }
        if (!dies) return false;
    }
    return true;
}

}  // namespace treg::cycles
