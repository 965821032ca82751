#include "tannaka/exact/report.hpp"

#include <algorithm>

namespace tannaka::exact {

void Report::merge(const Report& other, const std::string& prefix) {
    for (Check c : other.checks_) {
        c.name = prefix + c.name;
        checks_.push_back(std::move(c));
    }
}

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
}

Check check_equal(std::string name, const Matrix& lhs, const Matrix& rhs) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        return {std::move(name), false, "shape",
                std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
                    std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols())};
    }
    return check_zero(std::move(name), lhs - rhs);
}

Check check_zero(std::string name, const Matrix& m) {
    Scalar norm = m.max_norm();
    Check c{std::move(name), norm.is_zero(), norm.to_string(), {}};
    if (!c.passed) c.detail = "difference " + m.to_string();
    return c;
}

Check check_flag(std::string name, bool passed, std::string detail) {
    return {std::move(name), passed, passed ? "0" : "1", std::move(detail)};
}

} // namespace tannaka::exact
