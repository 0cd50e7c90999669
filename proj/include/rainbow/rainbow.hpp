#pragma once

#include "rainbow/approx.hpp"
#include "rainbow/colouring.hpp"
#include "rainbow/ear_growth.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/exact.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/io.hpp"
#include "rainbow/structure.hpp"
#include "rainbow/verify.hpp"
