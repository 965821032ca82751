#pragma once

#include <string>
#include <vector>

#include "tannaka/exact/matrix.hpp"

namespace tannaka::exact {

/// Outcome of one exact identity check. `residue` is the max-norm of the
/// difference matrix ("0" when the identity holds).
struct Check {
    std::string name;
    bool passed = false;
    std::string residue = "0";
    std::string detail;
};

class Report {
public:
    void add(Check c) { checks_.push_back(std::move(c)); }
    /// Appends `other`, prefixing each check name with `prefix`.
    void merge(const Report& other, const std::string& prefix = {});

    bool ok() const;
    std::size_t failures() const;
    const std::vector<Check>& checks() const { return checks_; }
    bool empty() const { return checks_.empty(); }

private:
    std::vector<Check> checks_;
};

/// lhs == rhs as exact matrices. Shape mismatches fail with a detail note.
Check check_equal(std::string name, const Matrix& lhs, const Matrix& rhs);
Check check_zero(std::string name, const Matrix& m);
Check check_flag(std::string name, bool passed, std::string detail = {});

} // namespace tannaka::exact
