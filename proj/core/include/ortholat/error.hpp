#pragma once

#include <stdexcept>
#include <string>

namespace ortholat {

enum class errc {
  cyclic_order,
  duplicate_label,
  unknown_label,
  universe_mismatch,
  not_a_lattice,
  unbounded,
  invalid_ortho_map,
  partial_map,
  internal_disagreement,
  lemma_violation,
  unknown_name,
  size_cap,
  universe_too_large,
  not_closed,
  negation_not_closed,
  not_ortho,
  out_of_range,
  parse_error,
  schema_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace ortholat
