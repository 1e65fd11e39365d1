#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace divkit {

/// Compiles a scalar expression in the single variable `z`.
///
/// Grammar: numbers, `z`, `pi`, `e`, binary `+ - * / ^`, unary minus,
/// parentheses and the functions exp, log, sqrt, abs, sign, log1p, expm1.
/// `^` is right-associative and binds tighter than unary minus, so `-z^2`
/// is `-(z^2)`. Throws FormatError on malformed input.
std::function<double(double)> compile_expression(std::string_view source);

}  // namespace divkit
