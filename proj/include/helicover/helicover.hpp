#pragma once
/// Umbrella header.

#include <helicover/error.hpp>
#include <helicover/numerics.hpp>
#include <helicover/helicoid.hpp>
#include <helicover/logmap.hpp>
#include <helicover/limits.hpp>
#include <helicover/covering.hpp>
#include <helicover/multi.hpp>
#include <helicover/sampling.hpp>
#include <helicover/io.hpp>
