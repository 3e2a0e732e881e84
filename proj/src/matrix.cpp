#include "confjord/matrix.hpp"

#include <sstream>

namespace confjord {

RMatrix RMatrix::symplectic_twist() const {
    if (k_ % 2 != 0)
        throw InputError("symplectic twist requires even matrix size");
    int h = k_ / 2;
    // J = [[0, -I], [I, 0]]: (J A)_{ij} = -A_{i+h,j} for i < h, A_{i-h,j} else;
    // (B J^{-1})_{ij} = B_{i,j+h} for j < h, -B_{i,j-h} else.
    RMatrix t = transpose();
    RMatrix out(k_);
    for (const auto& [ij, v] : t.entries()) {
        int i = ij.first, j = ij.second;
        int ii = i < h ? i + h : i - h;
        int jj = j < h ? j + h : j - h;
        Rational w = v;
        if ((i < h) != (j < h))
            w *= Rational(-1);
        out.add(ii, jj, w);
    }
    return out;
}

std::string RMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < k_; ++i) {
        if (i)
            os << "; ";
        for (int j = 0; j < k_; ++j) {
            if (j)
                os << " ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

std::vector<std::string> RMatrix::row_major() const {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(k_) * k_);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j)
            out.push_back(at(i, j).str());
    return out;
}

RMatrix commutator(const RMatrix& a, const RMatrix& b) {
    RMatrix out = a * b;
    RMatrix ba = b * a;
    ba *= Rational(-1);
    out += ba;
    return out;
}

RMatrix anticommutator(const RMatrix& a, const RMatrix& b) {
    RMatrix out = a * b;
    out += b * a;
    return out;
}

}  // namespace confjord
