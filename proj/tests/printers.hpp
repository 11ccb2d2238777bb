#pragma once

#include "asai/scalar.hpp"

#include <doctest.h>

#include <sstream>
#include <vector>

namespace doctest {
template <>
struct StringMaker<asai::SqrtScalar> {
    static String convert(const asai::SqrtScalar& x) { return x.str().c_str(); }
};
template <>
struct StringMaker<asai::CycloScalar> {
    static String convert(const asai::CycloScalar& x) { return x.str().c_str(); }
};
template <>
struct StringMaker<asai::RatFuncX> {
    static String convert(const asai::RatFuncX& x) { return x.str().c_str(); }
};
template <>
struct StringMaker<asai::Rational> {
    static String convert(const asai::Rational& x) { return x.get_str().c_str(); }
};
template <typename T>
struct StringMaker<std::vector<T>> {
    static String convert(const std::vector<T>& v) {
        String s = "[";
        for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + StringMaker<T>::convert(v[i]);
        return s + "]";
    }
};
}  // namespace doctest

// canonical a/b
inline asai::Rational frac(long a, long b = 1) {
    asai::Rational r(a, b);
    r.canonicalize();
    return r;
}
