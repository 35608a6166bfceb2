#pragma once

#include <string>

#include "ccp/grad/params.hpp"

namespace ccp::grad {

/// Binary checkpoint of named arrays. Layout (little-endian):
///   magic "CCPCKPT1" (8 bytes)
///   u32 record count
///   per record: u32 name length, name bytes,
///               u64 rows, u64 cols, rows*cols f64 row-major
void save_checkpoint(const std::string& path, const ParameterSet& params);
ParameterSet load_checkpoint(const std::string& path);

}  // namespace ccp::grad
