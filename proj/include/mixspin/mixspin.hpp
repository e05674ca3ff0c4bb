#pragma once

#include "mixspin/error.hpp"
#include "mixspin/model.hpp"
#include "mixspin/recursion.hpp"
#include "mixspin/linalg.hpp"
#include "mixspin/stability.hpp"
#include "mixspin/channels.hpp"
#include "mixspin/criteria.hpp"
#include "mixspin/entropy.hpp"
#include "mixspin/report.hpp"
