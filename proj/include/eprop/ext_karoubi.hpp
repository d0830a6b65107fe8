#pragma once

#include <string>
#include <vector>

#include "eprop/prop_scom.hpp"

namespace eprop {

// Ext-group dimension query between simple functors on free groups:
// dim Ext^{m-n}(S_mu, S_lambda) = rank of the sandwich e_mu . E(m,n) . e_lambda.
struct ExtQuery {
  Partition mu;      // codomain side, mu |- n
  Partition lambda;  // domain side, lambda |- m
};

struct ExtResult {
  int dimension = 0;
  int degree = 0;
  // `dimension` linearly independent sandwiched representatives, each fixed
  // by both idempotent actions.
  std::vector<EMorphism> basis;
};

struct ExtBounds {
  int max_m = 6;
  int max_n = 6;

  static ExtBounds from_env();
};

ExtResult ext_dim(const ExtQuery& q, const ExtBounds& bounds = ExtBounds::from_env(),
                  int jobs = 1);

// Ext between T^n o a and S^m o a: sandwich with e_(m) on the domain side
// only. Dimension is 1 iff n = m (in degree 0).
ExtResult ext_symmetric_power(int n, int m, const ExtBounds& bounds = ExtBounds::from_env(),
                              int jobs = 1);

enum class ExtFamily { simple_simple, exterior, tensor_symmetric };

struct ExtTableEntry {
  std::string mu;
  std::string lambda;
  int m = 0;
  int n = 0;
  int degree = 0;
  int dimension = 0;
};

std::vector<ExtTableEntry> ext_table(int max_m, int max_n, ExtFamily family,
                                     const ExtBounds& bounds = ExtBounds::from_env(),
                                     int jobs = 1);

}  // namespace eprop
