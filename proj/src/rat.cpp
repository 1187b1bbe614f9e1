#include "weh/rat.hpp"

#include <cmath>
#include <sstream>

namespace weh {

double ExtScalar::to_double() const {
    double v = a_.get_d();
    if (d_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
    return v;
}

std::string ExtScalar::to_string() const {
    if (d_ == 0) return a_.get_str();
    std::ostringstream os;
    Rat ab = abs(b_);
    os << "(" << a_.get_str() << (b_ < 0 ? "-" : "+") << ab.get_str() << "*sqrt(" << d_ << "))";
    return os.str();
}

} // namespace weh
