#include "icat/report.hpp"

#include <sstream>

namespace icat {

bool Report::ok() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

const Check* Report::find(const std::string& law) const {
    for (const auto& c : checks_)
        if (c.law == law) return &c;
    return nullptr;
}

bool Report::passed(const std::string& law) const {
    const Check* c = find(law);
    return c && c->pass;
}

void Report::add(std::string law, std::string anchor, bool pass, std::string note) {
    checks_.push_back(Check{std::move(law), std::move(anchor), pass, std::nullopt, std::move(note)});
}

bool Report::equal(std::string law, std::string anchor, const Matrix& lhs, const Matrix& rhs, const Matrix* basis) {
    Check c{std::move(law), std::move(anchor), false, std::nullopt, {}};
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        c.note = "shape mismatch " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
                 std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols());
    } else {
        std::size_t j = lhs.first_differing_col(rhs);
        c.pass = j == lhs.cols();
        if (!c.pass) {
            c.note = "sides differ on basis vector " + std::to_string(j);
            std::vector<std::string> w;
            if (basis && j < basis->cols()) {
                for (std::size_t i = 0; i < basis->rows(); ++i) w.push_back((*basis)(i, j).str());
            } else {
                w.push_back(std::to_string(j));
            }
            c.witness = std::move(w);
        }
    }
    checks_.push_back(std::move(c));
    return checks_.back().pass;
}

bool Report::equal_lazy(std::string law, std::string anchor, const std::function<std::pair<Matrix, Matrix>()>& sides,
                        const Matrix* basis) {
    try {
        auto [l, r] = sides();
        return equal(std::move(law), std::move(anchor), l, r, basis);
    } catch (const Error& e) {
        add(std::move(law), std::move(anchor), false, e.what());
        return false;
    }
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (auto c : other.checks_) {
        if (!prefix.empty()) c.law = prefix + "." + c.law;
        checks_.push_back(std::move(c));
    }
}

std::string Report::text() const {
    std::ostringstream os;
    os << (subject_.empty() ? std::string("report") : subject_) << ": " << (ok() ? "PASS" : "FAIL") << '\n';
    for (const auto& c : checks_) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.law;
        if (!c.anchor.empty()) os << "  (" << c.anchor << ")";
        if (!c.note.empty()) os << "  -- " << c.note;
        if (c.witness) {
            os << "  witness (";
            for (std::size_t i = 0; i < c.witness->size(); ++i) os << (i ? " " : "") << (*c.witness)[i];
            os << ")";
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace icat
