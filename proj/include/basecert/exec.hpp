#pragma once

namespace basecert {

// execution mode for the heavy kernels; both modes must produce
// byte-identical results, parallel is the default
enum class Exec { serial, parallel };

}  // namespace basecert
