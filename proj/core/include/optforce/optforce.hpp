#pragma once

#include "optforce/drive.hpp"
#include "optforce/dynamics.hpp"
#include "optforce/error.hpp"
#include "optforce/force.hpp"
#include "optforce/reservoir.hpp"
#include "optforce/trajectory.hpp"
#include "optforce/version.hpp"
