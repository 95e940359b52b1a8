#pragma once

#include "harbourne/bounds.hpp"
#include "harbourne/catalog.hpp"
#include "harbourne/chern.hpp"
#include "harbourne/core.hpp"
#include "harbourne/document.hpp"
#include "harbourne/error.hpp"
#include "harbourne/geometry.hpp"
#include "harbourne/rational.hpp"
#include "harbourne/search.hpp"
