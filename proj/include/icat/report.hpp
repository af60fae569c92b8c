#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icat/matrix.hpp"

namespace icat {

/// One verified law. The witness, when present, is the domain basis vector
/// (in ambient tensor coordinates) on which the two sides differ.
struct Check {
    std::string law;
    std::string anchor;
    bool pass = false;
    std::optional<std::vector<std::string>> witness;
    std::string note;
};

class Report {
public:
    Report() = default;
    explicit Report(std::string subject) : subject_(std::move(subject)) {}

    const std::string& subject() const { return subject_; }
    const std::vector<Check>& checks() const { return checks_; }

    /// Overall verdict: conjunction of all records (vacuously true).
    bool ok() const;
    const Check* find(const std::string& law) const;
    bool passed(const std::string& law) const;

    void add(std::string law, std::string anchor, bool pass, std::string note = {});

    /// Records lhs == rhs. `basis` holds the domain basis as columns and is
    /// used to report the first column on which the sides disagree.
    bool equal(std::string law, std::string anchor, const Matrix& lhs, const Matrix& rhs,
               const Matrix* basis = nullptr);

    /// Evaluates both sides lazily; a thrown Error (a composite leaving its
    /// expected subspace, say) records a failure instead of propagating.
    bool equal_lazy(std::string law, std::string anchor, const std::function<std::pair<Matrix, Matrix>()>& sides,
                    const Matrix* basis = nullptr);

    void merge(const Report& other, const std::string& prefix = {});

    std::string text() const;

private:
    std::string subject_;
    std::vector<Check> checks_;
};

}  // namespace icat
