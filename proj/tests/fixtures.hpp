#pragma once

#include <string>
#include <vector>

#include "starsys/core.hpp"

namespace fixtures {

using starsys::coloured_star_system;
using starsys::star;
using starsys::star_system;

// S_3(6), five blocks.
inline star_system s3_6() {
  return {6, 3, {{1, {3, 5, 6}}, {2, {1, 3, 6}}, {4, {1, 2, 3}}, {5, {2, 3, 4}}, {6, {3, 4, 5}}}};
}

// S_3(9) with an 8-class colouring; chromatic index 8.
inline star_system s3_9_eight() {
  return {9, 3, {{1, {3, 5, 6}}, {2, {1, 3, 6}}, {4, {1, 2, 3}}, {5, {2, 3, 4}},
                 {6, {3, 4, 5}}, {7, {1, 2, 3}}, {8, {4, 5, 9}}, {7, {4, 5, 8}},
                 {8, {1, 2, 3}}, {6, {7, 8, 9}}, {9, {1, 2, 3}}, {9, {4, 5, 7}}}};
}

inline coloured_star_system s3_9_eight_coloured() {
  return {s3_9_eight(),
          {{"C1", {0}}, {"C2", {1, 11}}, {"C3", {2, 9}}, {"C4", {3}},
           {"C5", {4}}, {"C6", {5, 6}}, {"C7", {7, 10}}, {"C8", {8}}}};
}

// S_3(9) in which every two blocks meet; chromatic index 12.
inline star_system s3_9_twelve() {
  return {9, 3, {{1, {2, 3, 4}}, {1, {5, 6, 7}}, {2, {3, 4, 5}}, {3, {4, 5, 6}},
                 {3, {7, 8, 9}}, {4, {5, 6, 7}}, {6, {2, 5, 7}}, {7, {2, 5, 8}},
                 {8, {1, 4, 5}}, {8, {2, 6, 9}}, {9, {1, 5, 6}}, {9, {2, 4, 7}}}};
}

// S_3(10) meeting L(10,3) = 8, listed class by class.
inline coloured_star_system s3_10_eight_coloured() {
  const std::vector<std::vector<star>> classes = {
      {{1, {2, 4, 5}}, {6, {7, 8, 10}}}, {{2, {3, 4, 5}}, {9, {6, 8, 10}}},
      {{4, {5, 6, 7}}, {10, {1, 2, 3}}}, {{4, {8, 9, 10}}, {6, {1, 2, 3}}},
      {{5, {6, 9, 10}}, {7, {1, 2, 3}}}, {{7, {5, 9, 10}}, {8, {1, 2, 3}}},
      {{8, {5, 7, 10}}, {9, {1, 2, 3}}}, {{3, {1, 4, 5}}}};
  coloured_star_system c;
  c.system = {10, 3, {}};
  for (std::size_t k = 0; k < classes.size(); ++k) {
    starsys::colour_class cls{"K" + std::to_string(k + 1), {}};
    for (const star& s : classes[k]) {
      cls.members.push_back(c.system.blocks.size());
      c.system.blocks.push_back(s);
    }
    c.classes.push_back(cls);
  }
  return c;
}

inline star_system s3_10_eight() { return s3_10_eight_coloured().system; }

}  // namespace fixtures
