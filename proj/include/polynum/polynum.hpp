#pragma once

#include "polynum/exact_geometry.hpp"
#include "polynum/face_lattice.hpp"
#include "polynum/triangulation.hpp"
#include "polynum/partition.hpp"
#include "polynum/sequences.hpp"
#include "polynum/io.hpp"
#include "polynum/pipeline.hpp"
