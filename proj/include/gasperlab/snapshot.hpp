/**
 * Copyright (c) 2026 The Gasperlab Authors
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <string>

#include "gasperlab/view.hpp"

namespace gasperlab {

// Line-oriented view snapshot: a header with the validator set and clock,
// then one message per line in canonical (slot, kind, id) order.  Numeric
// fields use hexfloat so round-trips are bit-exact.
std::string export_view(const View& view);
View import_view(const std::string& text);

void write_view_file(const View& view, const std::string& path);
View read_view_file(const std::string& path);

}  // namespace gasperlab
