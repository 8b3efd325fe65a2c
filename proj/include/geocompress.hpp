#pragma once

#include "geocompress/ball_tree.hpp"
#include "geocompress/csv.hpp"
#include "geocompress/dataset.hpp"
#include "geocompress/dbscan.hpp"
#include "geocompress/error.hpp"
#include "geocompress/geo.hpp"
#include "geocompress/pipeline.hpp"
#include "geocompress/reduce.hpp"
#include "geocompress/svg.hpp"
