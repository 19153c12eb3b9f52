// Copyright 2026 The qenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qenc/oracle.hpp"

#include "qenc/phase.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>

namespace qenc::oracle {

namespace {

using Eigen::Matrix2cd;
using Eigen::MatrixXcd;

void check_scale(unsigned n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxOracleQubits) {
        throw OracleScaleExceeded("oracle supports 1.." +
                                  std::to_string(kMaxOracleQubits) +
                                  " qubits, got " + std::to_string(n_qubits));
    }
}

MatrixXcd kron(const MatrixXcd &a, const MatrixXcd &b) {
    MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

Matrix2cd pauli_x() {
    Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Matrix2cd pauli_z() {
    Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

} // namespace

DenseOperator embed_1q(const Matrix2cd &op, Qubit qubit, unsigned n_qubits) {
    check_scale(n_qubits);
    if (qubit >= n_qubits) {
        throw std::invalid_argument("qubit out of range");
    }
    // Qubit 0 is the least significant index bit, i.e. the rightmost factor.
    MatrixXcd acc = MatrixXcd::Identity(1, 1);
    for (unsigned j = n_qubits; j-- > 0;) {
        const MatrixXcd factor =
            j == qubit ? MatrixXcd(op) : MatrixXcd(Matrix2cd::Identity());
        acc = kron(acc, factor);
    }
    return {n_qubits, std::move(acc)};
}

DenseOperator build_hamiltonian(HamiltonianKind kind,
                                std::span<const Qubit> targets,
                                unsigned n_qubits) {
    check_scale(n_qubits);
    if (targets.empty()) {
        throw std::invalid_argument("target set must be non-empty");
    }
    const auto dim = Eigen::Index{1} << n_qubits;
    switch (kind) {
    case HamiltonianKind::Jx:
    case HamiltonianKind::Jx2: {
        MatrixXcd jx = MatrixXcd::Zero(dim, dim);
        for (Qubit q : targets) {
            jx += 0.5 * embed_1q(pauli_x(), q, n_qubits).matrix;
        }
        if (kind == HamiltonianKind::Jx) {
            return {n_qubits, std::move(jx)};
        }
        return {n_qubits, jx * jx};
    }
    case HamiltonianKind::ZZ:
        if (targets.size() != 2 || targets[0] == targets[1]) {
            throw std::invalid_argument("ZZ needs two distinct targets");
        }
        return {n_qubits, embed_1q(pauli_z(), targets[0], n_qubits).matrix *
                              embed_1q(pauli_z(), targets[1], n_qubits).matrix};
    }
    throw std::invalid_argument("unknown Hamiltonian kind");
}

double hermiticity_error(const DenseOperator &h) {
    return (h.matrix - h.matrix.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_error(const MatrixXcd &u) {
    const MatrixXcd id = MatrixXcd::Identity(u.rows(), u.cols());
    return (u.adjoint() * u - id).cwiseAbs().maxCoeff();
}

MatrixXcd propagator(const DenseOperator &h, double theta) {
    if (hermiticity_error(h) > 1e-12) {
        throw std::invalid_argument("dense_evolve needs a Hermitian operator");
    }
    Eigen::SelfAdjointEigenSolver<MatrixXcd> eig(h.matrix);
    if (eig.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed");
    }
    const Eigen::VectorXd &lambda = eig.eigenvalues();
    Eigen::VectorXcd phases(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        phases(i) = std::polar(1.0, -theta * lambda(i));
    }
    const MatrixXcd &v = eig.eigenvectors();
    MatrixXcd u = v * phases.asDiagonal() * v.adjoint();
    const double err = unitarity_error(u);
    if (err > 1e-12) {
        throw std::runtime_error("propagator unitarity error " +
                                 std::to_string(err));
    }
    return u;
}

StateVector dense_apply(const StateVector &s, const MatrixXcd &u) {
    if (static_cast<std::size_t>(u.rows()) != s.size() ||
        u.rows() != u.cols()) {
        throw std::invalid_argument("operator and state dimensions differ");
    }
    Eigen::VectorXcd in(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        in(static_cast<Eigen::Index>(i)) = s[i];
    }
    const Eigen::VectorXcd out = u * in;
    std::vector<Complex> amps(out.data(), out.data() + out.size());
    return StateVector::from_amplitudes(std::move(amps));
}

StateVector dense_evolve(const StateVector &s, const DenseOperator &h,
                         double theta) {
    if (h.n_qubits != s.n_qubits()) {
        throw std::invalid_argument("operator and state dimensions differ");
    }
    return dense_apply(s, propagator(h, theta));
}

// --- derivations ---------------------------------------------------------

namespace {

std::vector<Qubit> all_qubits(unsigned n) {
    std::vector<Qubit> qs(n);
    for (unsigned i = 0; i < n; ++i) {
        qs[i] = i;
    }
    return qs;
}

/// Jx(linear) * Jx2(pi/2) on every qubit of an n-qubit register.
MatrixXcd ghz_propagator(unsigned n, double linear_angle) {
    const auto qs = all_qubits(n);
    const MatrixXcd twist = propagator(
        build_hamiltonian(HamiltonianKind::Jx2, qs, n), std::numbers::pi / 2);
    if (linear_angle == 0.0) {
        return twist;
    }
    return propagator(build_hamiltonian(HamiltonianKind::Jx, qs, n),
                      linear_angle) *
           twist;
}

constexpr double kSupportFloor = 1.0 - 1e-10;

double derive_linear_angle(std::string &note) {
    double best_angle = 0.0;
    double best_support = -1.0;
    std::ostringstream diag;
    for (double candidate : odd_n_linear_candidates()) {
        const double support = ghz_support(3, candidate);
        diag << " support(" << candidate << ")=" << support;
        if (support > best_support + 1e-12) {
            best_support = support;
            best_angle = candidate;
        }
    }
    if (best_support < kSupportFloor) {
        throw DerivationFailure("no linear angle completes the 3-qubit GHZ:" +
                                diag.str());
    }
    note = "first candidate reaching GHZ support 1 at n=3;" + diag.str();
    return best_angle;
}

} // namespace

std::vector<double> odd_n_linear_candidates() {
    constexpr double pi = std::numbers::pi;
    return {pi / 2, -pi / 2, pi, -pi};
}

double ghz_support(unsigned n_qubits, double linear_angle) {
    const MatrixXcd u = ghz_propagator(n_qubits, linear_angle);
    const Eigen::Index last = u.rows() - 1;
    return std::norm(u(0, 0)) + std::norm(u(last, 0));
}

std::vector<RecordedConstant> derive_constant(Derivation d) {
    constexpr double pi = std::numbers::pi;
    switch (d) {
    case Derivation::OddNLinearAngle: {
        std::string note;
        const double angle = derive_linear_angle(note);
        return {{"odd_n_linear_angle", angle, note}};
    }
    case Derivation::Protocol2Phase: {
        // N = 3 appended qubits plus the data qubit; |0000> and |1000> are
        // the two basis inputs of the collective pulse.
        constexpr unsigned n = 4;
        const MatrixXcd u = ghz_propagator(n, 0.0);
        const Eigen::Index ones = (1 << n) - 1;
        const double from_zero =
            std::arg(u(ones, 0)) - std::arg(u(0, 0));
        const double from_data =
            std::arg(u(ones ^ 1, 1)) - std::arg(u(1, 1));
        const double support_zero = std::norm(u(0, 0)) + std::norm(u(ones, 0));
        const double support_data = std::norm(u(1, 1)) + std::norm(u(ones ^ 1, 1));
        if (support_zero < kSupportFloor || support_data < kSupportFloor) {
            throw DerivationFailure("protocol-2 pulse leaves the GHZ span");
        }
        if (phase_distance(from_zero, from_data) > 1e-12) {
            throw DerivationFailure("protocol-2 branches disagree on the phase");
        }
        const double quoted = wrap_phase((n) * pi / 2);
        std::ostringstream note;
        note << "arg(c_1111) - arg(c_0000) after Jx2(pi/2) on 4 qubits; "
             << "quoted (N+1)pi/2 wraps to " << quoted << ", difference "
             << wrap_phase(from_zero - quoted);
        return {{"p2_n3_relative_phase", wrap_phase(from_zero), note.str()},
                {"p2_n3_quoted_phase", quoted,
                 "(N+1)pi/2 at N=3, kept for comparison"}};
    }
    case Derivation::ShorTripletPhases: {
        std::string ignored;
        const double angle = derive_linear_angle(ignored);
        const MatrixXcd u = ghz_propagator(3, angle);
        const double support0 = std::norm(u(0, 0)) + std::norm(u(7, 0));
        const double support1 = std::norm(u(0, 7)) + std::norm(u(7, 7));
        if (support0 < kSupportFloor || support1 < kSupportFloor) {
            throw DerivationFailure("triplet pulse leaves the GHZ span");
        }
        const std::string note = "triplet pulse Jx2(pi/2) then Jx(" +
                                 std::to_string(angle) + ")";
        return {
            {"shor_triplet_zero_phase0", std::arg(u(0, 0)), note + " on |000>"},
            {"shor_triplet_zero_phase1", std::arg(u(7, 0)), note + " on |000>"},
            {"shor_triplet_one_phase0", std::arg(u(0, 7)), note + " on |111>"},
            {"shor_triplet_one_phase1", std::arg(u(7, 7)), note + " on |111>"},
        };
    }
    }
    throw std::invalid_argument("unknown derivation");
}

std::vector<RecordedConstant> derive_all() {
    std::vector<RecordedConstant> out;
    for (Derivation d : {Derivation::OddNLinearAngle, Derivation::Protocol2Phase,
                         Derivation::ShorTripletPhases}) {
        for (auto &c : derive_constant(d)) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::string format_constants(std::span<const RecordedConstant> cs) {
    std::string out =
        "# Constants derived by the dense oracle. Regenerate with\n"
        "#   qenc derive --output core/data/derived_constants.txt\n"
        "# Values are radians with 17 significant digits.\n";
    char buf[64];
    for (const auto &c : cs) {
        if (!c.note.empty()) {
            out += "\n# " + c.note + "\n";
        }
        std::snprintf(buf, sizeof buf, "%.17g", c.value);
        out += c.key + " = " + buf + "\n";
    }
    return out;
}

std::map<std::string, double> parse_constants(std::string_view text) {
    std::map<std::string, double> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("constants line " +
                                        std::to_string(line_no) +
                                        " has no '='");
        }
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (key.empty() || used != value.size()) {
            throw std::invalid_argument("malformed constants line " +
                                        std::to_string(line_no));
        }
        out[key] = v;
    }
    return out;
}

} // namespace qenc::oracle
