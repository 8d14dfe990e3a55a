#pragma once

#include <stdexcept>
#include <string>

namespace qduality {

// A denominator factor vanished at the evaluation point. Samplers catch this
// and retry with a fresh point; residue code catches it to locate poles.
class pole_error : public std::runtime_error {
 public:
  explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

// More than one factor vanished (or one vanished to higher order), so the
// simple-pole residue formula does not apply.
class non_simple_pole_error : public pole_error {
 public:
  explicit non_simple_pole_error(const std::string& what) : pole_error(what) {}
};

// A sampler gave up after the maximum number of retries.
class resample_exhausted : public std::runtime_error {
 public:
  explicit resample_exhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qduality
