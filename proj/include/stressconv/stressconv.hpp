#pragma once

#include <stressconv/apsp.hpp>
#include <stressconv/classify.hpp>
#include <stressconv/error.hpp>
#include <stressconv/families.hpp>
#include <stressconv/graph.hpp>
#include <stressconv/graph_json.hpp>
#include <stressconv/reduction.hpp>
#include <stressconv/solve.hpp>
#include <stressconv/stress.hpp>
