#pragma once

#include "kadj/rings/bigint.hpp"
#include "kadj/rings/concepts.hpp"
#include "kadj/rings/dual.hpp"
#include "kadj/rings/prime_field.hpp"
#include "kadj/rings/series.hpp"
