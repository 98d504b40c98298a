#pragma once

#include <string>

#include "num/exact.hpp"

namespace anomlab::fieldalg {

using num::ExactScalar;
using num::GaussianRational;

enum class DomainKind { T1, T2, T3, Interval, T2xInterval };

/// Integration domain: a torus T^d, the interval [0, L], or T^2 x [0, L].
/// The interval coordinate is always the last coordinate; L is an exact
/// monomial q*pi^k (2*pi for paths, 1 for the product cylinder).
struct Domain {
  DomainKind kind = DomainKind::T1;
  ExactScalar interval_length;

  static Domain t1() { return {DomainKind::T1, {}}; }
  static Domain t2() { return {DomainKind::T2, {}}; }
  static Domain t3() { return {DomainKind::T3, {}}; }
  static Domain interval(ExactScalar len = ExactScalar(GaussianRational(2), 1)) {
    return {DomainKind::Interval, std::move(len)};
  }
  static Domain t2_interval(ExactScalar len = ExactScalar(1)) {
    return {DomainKind::T2xInterval, std::move(len)};
  }

  int torus_dims() const {
    switch (kind) {
      case DomainKind::T1: return 1;
      case DomainKind::T2: return 2;
      case DomainKind::T3: return 3;
      case DomainKind::Interval: return 0;
      case DomainKind::T2xInterval: return 2;
    }
    return 0;
  }

  bool has_interval() const {
    return kind == DomainKind::Interval || kind == DomainKind::T2xInterval;
  }

  int dim() const { return torus_dims() + (has_interval() ? 1 : 0); }

  bool operator==(const Domain& o) const {
    return kind == o.kind && (!has_interval() || interval_length == o.interval_length);
  }

  std::string str() const {
    switch (kind) {
      case DomainKind::T1: return "T1";
      case DomainKind::T2: return "T2";
      case DomainKind::T3: return "T3";
      case DomainKind::Interval: return "I";
      case DomainKind::T2xInterval: return "T2xI";
    }
    return "?";
  }
};

}  // namespace anomlab::fieldalg
