#ifndef WALLED_SPARSE_HPP
#define WALLED_SPARSE_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "walled/laurent.hpp"

namespace walled {

// Row-major sparse matrix; zero entries are never stored.
template <class S>
class SparseMatrix {
public:
    using Row = std::map<std::size_t, S>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

    static SparseMatrix identity(std::size_t n) {
        SparseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace(i, S(1));
        return m;
    }

    std::size_t rows() const { return data_.size(); }
    std::size_t cols() const { return cols_; }
    const Row& row(std::size_t i) const { return data_[i]; }

    S at(std::size_t i, std::size_t j) const {
        auto it = data_[i].find(j);
        return it == data_[i].end() ? S(0) : it->second;
    }

    void add(std::size_t i, std::size_t j, const S& v) {
        if (v == S(0)) return;
        auto [it, ins] = data_[i].try_emplace(j, v);
        if (!ins) {
            it->second += v;
            if (it->second == S(0)) data_[i].erase(it);
        }
    }

    void set(std::size_t i, std::size_t j, const S& v) {
        if (v == S(0))
            data_[i].erase(j);
        else
            data_[i][j] = v;
    }

    std::size_t nnz() const {
        std::size_t k = 0;
        for (const auto& r : data_) k += r.size();
        return k;
    }

    bool is_zero() const { return nnz() == 0; }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

    SparseMatrix& operator+=(const SparseMatrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < rows(); ++i)
            for (const auto& [j, v] : o.data_[i]) add(i, j, v);
        return *this;
    }
    SparseMatrix& operator-=(const SparseMatrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < rows(); ++i)
            for (const auto& [j, v] : o.data_[i]) add(i, j, -v);
        return *this;
    }
    friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
    friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }

    SparseMatrix scaled(const S& c) const {
        SparseMatrix r(rows(), cols());
        if (c == S(0)) return r;
        for (std::size_t i = 0; i < rows(); ++i)
            for (const auto& [j, v] : data_[i]) r.add(i, j, v * c);
        return r;
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
        SparseMatrix r(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (const auto& [k, av] : a.data_[i])
                for (const auto& [j, bv] : b.data_[k]) r.add(i, j, av * bv);
        return r;
    }

    SparseMatrix transpose() const {
        SparseMatrix r(cols(), rows());
        for (std::size_t i = 0; i < rows(); ++i)
            for (const auto& [j, v] : data_[i]) r.data_[j].emplace(i, v);
        return r;
    }

    // Kronecker product; the left factor occupies the high digits.
    friend SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
        SparseMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (const auto& [j, av] : a.data_[i])
                for (std::size_t k = 0; k < b.rows(); ++k)
                    for (const auto& [l, bv] : b.data_[k])
                        r.data_[i * b.rows() + k].emplace(j * b.cols() + l, av * bv);
        return r;
    }

private:
    void check_same(const SparseMatrix& o) const {
        if (rows() != o.rows() || cols() != o.cols()) throw std::invalid_argument("matrix sum: dimension mismatch");
    }

    std::size_t cols_ = 0;
    std::vector<Row> data_;
};

using LMatrix = SparseMatrix<LaurentPoly>;
using QMatrix = SparseMatrix<Rational>;

QMatrix eval_matrix(const LMatrix& m, const Rational& q0);

// Incremental row echelon form over Z; rational input rows are scaled to
// primitive integer rows and reduced without fractions.
class EchelonBasis {
public:
    using IntRow = std::map<std::size_t, mpz_class>;

    // returns true if the row was independent of those already inserted
    bool insert(const std::map<std::size_t, Rational>& row);
    bool insert_int(IntRow row);
    std::size_t rank() const { return pivots_.size(); }

private:
    std::map<std::size_t, IntRow> pivots_;
};

std::size_t rank_of_vectors(const std::vector<std::map<std::size_t, Rational>>& vecs);
// Basis of { c : sum_i c_i vecs[i] = 0 }.
std::vector<std::vector<Rational>> kernel_of_vectors(const std::vector<std::map<std::size_t, Rational>>& vecs);

}  // namespace walled

#endif
