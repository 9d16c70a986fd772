#pragma once

#include "flagsbs/harness/reference.hpp"

namespace flagsbs {
namespace oracle = reference;
}
