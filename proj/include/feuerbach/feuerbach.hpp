#pragma once
// Convenience umbrella: pulls in the whole library.

#include "errors.hpp"
#include "rational.hpp"
#include "tower.hpp"
#include "text.hpp"
#include "mat3.hpp"
#include "barycentric.hpp"
#include "affinemap.hpp"
#include "conics.hpp"
#include "cevian.hpp"
#include "certify.hpp"
#include "report.hpp"
#include "svg.hpp"
