#pragma once

// Umbrella header: exact and simulated probabilities that among n stick
// lengths drawn uniformly from [0,1], no k of them can form a k-gon.

#include <sticks/bigint.hpp>
#include <sticks/integrator.hpp>
#include <sticks/montecarlo.hpp>
#include <sticks/oracle.hpp>
#include <sticks/ratio.hpp>
#include <sticks/sequences.hpp>
#include <sticks/verify.hpp>
