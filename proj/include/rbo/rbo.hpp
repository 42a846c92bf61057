#ifndef RBO_RBO_HPP
#define RBO_RBO_HPP

#include "rbo/error.hpp"
#include "rbo/rational.hpp"
#include "rbo/element.hpp"
#include "rbo/algebra.hpp"
#include "rbo/linalg.hpp"
#include "rbo/operator_expr.hpp"
#include "rbo/domain.hpp"
#include "rbo/report.hpp"
#include "rbo/algebras.hpp"
#include "rbo/operators.hpp"
#include "rbo/checks.hpp"
#include "rbo/dendriform.hpp"
#include "rbo/tensor.hpp"
#include "rbo/io.hpp"
#include "rbo/suite.hpp"

#endif
