#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "kmfold/poly.hpp"

namespace kmfold {

struct ExprError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Env = std::map<std::string, std::int64_t>;

// Small arithmetic language used by the data files: integers, variables,
// + - * / % ^, comparisons, && ||, !, and c ? a : b. Integer division must be
// exact. In polynomial mode the identifier t is the indeterminate.
class Expr {
public:
    struct Node;
    Expr() = default;
    explicit Expr(const std::string& src);

    std::int64_t eval(const Env& env) const;
    Poly eval_poly(const Env& env) const;
    const std::string& source() const { return src_; }

private:
    std::string src_;
    std::shared_ptr<const Node> root_;
};

std::int64_t eval_int(const std::string& src, const Env& env);

}  // namespace kmfold
