#include "transversal/rational.hpp"

#include "transversal/errors.hpp"

namespace transversal {

Rational rational_from_string(const std::string& text)
{
    if (text.empty())
        throw InvalidArgumentError("empty rational literal");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw InvalidArgumentError("bad rational literal: " + text);
    }
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw InvalidArgumentError("bad rational literal: " + text);
    if (sgn(r.get_den()) == 0)
        throw InvalidArgumentError("zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r)
{
    return r.get_str();
}

}  // namespace transversal
