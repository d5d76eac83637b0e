#pragma once

#include <string>

#include "hurwitz/braid.hpp"
#include "hurwitz/descent.hpp"
#include "hurwitz/specialize.hpp"

namespace hurwitz {

// Serialized reports, pretty printed, each carrying a top level
// "schema": "hurwitz-covers/1" marker. Conventions: rationals as "p/q"
// strings, polynomials as coefficient arrays lowest first, truncated series
// as {precision, coefficients}, permutations as {cycles, images}.

// class representatives of degree n; with oracle set (n in {6, 8}) the
// exhaustive enumeration is run alongside and compared
std::string nielsen_json(int n, bool oracle = false);

// monodromy of the three finite loops plus the orbit closure
std::string braid_orbit_json(int n);

// descent verdicts for every class of degree n
std::string descent_json(int n);

// index-two lift of the distinguished class
std::string an_lift_json(int n);

// the two degenerate members and the exact starting coefficients
std::string degenerate_json(int n);

std::string to_json(const DeformationState& state);
std::string to_json(const SeriesNormalization& series, const ReconstructionResult& rec);
std::string to_json(const VerificationReport& rep);
std::string to_json(const PipelineResult& pipe);
std::string to_json(const SpecializationReport& rep, const AnCheckReport& an);

// comparison of the computed degree six family against its published
// closed form, one named check per coefficient
std::string verify_n6_json(const PipelineResult& pipe);

// Recomputes every certificate stored in a serialized specialization
// report: Sturm counts and squarefree flags of the stored fibers, interval
// membership, the modular witness pattern and the verdict flags. Returns
// false (with a reason in *why) on any mismatch or malformed input.
bool replay_specialization(const std::string& json_text, std::string* why = nullptr);

}  // namespace hurwitz
