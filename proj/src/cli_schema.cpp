#include "hypend/cli.hpp"

#include <stdexcept>

namespace hypend::cli {

namespace {

const char* const kInputSchema = R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "hypend/request/v1",
  "title": "hypend request",
  "type": "object",
  "required": ["command"],
  "definitions": {
    "number": {"type": "number"},
    "complex": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
    "ideal": {"oneOf": [{"$ref": "#/definitions/complex"}, {"const": "inf"}]},
    "ideals": {"type": "array", "items": {"$ref": "#/definitions/ideal"}},
    "uhs": {"type": "array", "items": {"type": "number"}, "minItems": 3, "maxItems": 3},
    "uhs_points": {"type": "array", "items": {"$ref": "#/definitions/uhs"}, "minItems": 1},
    "disk": {
      "oneOf": [
        {"type": "object", "additionalProperties": false, "required": ["center", "radius"],
         "properties": {"center": {"$ref": "#/definitions/complex"}, "radius": {"type": "number", "exclusiveMinimum": 0},
                        "side": {"enum": ["interior", "exterior"]}}},
        {"type": "object", "additionalProperties": false, "required": ["line"],
         "properties": {"line": {"type": "array", "items": {"type": "number"}, "minItems": 3, "maxItems": 3},
                        "side": {"enum": ["positive", "negative"]}}},
        {"type": "object", "additionalProperties": false, "required": ["pole"],
         "properties": {"pole": {"type": "array", "items": {"type": "number"}, "minItems": 4, "maxItems": 4}}}
      ]
    },
    "matrix2": {"type": "array", "minItems": 2, "maxItems": 2,
                "items": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}},
    "common": {
      "version": {"const": "v1"},
      "tol": {"type": "number", "exclusiveMinimum": 0},
      "seed": {"type": "integer", "minimum": 0},
      "samples": {"type": "integer", "minimum": 1}
    }
  },
  "oneOf": [
    {"additionalProperties": false, "required": ["command", "complement", "queries"],
     "properties": {"command": {"enum": ["kp", "maxdisk"]}, "version": {"const": "v1"},
                    "tol": {"type": "number", "exclusiveMinimum": 0}, "seed": {"type": "integer", "minimum": 0},
                    "samples": {"type": "integer", "minimum": 1},
                    "complement": {"$ref": "#/definitions/ideals"},
                    "queries": {"type": "array", "items": {"$ref": "#/definitions/ideal"}, "minItems": 1}}},
    {"additionalProperties": false, "required": ["command", "complement", "points"],
     "properties": {"command": {"enum": ["height", "project", "horoball-check"]}, "version": {"const": "v1"},
                    "tol": {"type": "number", "exclusiveMinimum": 0}, "seed": {"type": "integer", "minimum": 0},
                    "samples": {"type": "integer", "minimum": 1},
                    "complement": {"$ref": "#/definitions/ideals"}, "points": {"$ref": "#/definitions/uhs_points"}}},
    {"additionalProperties": false, "required": ["command", "complement", "point", "toward"],
     "properties": {"command": {"const": "trace"}, "version": {"const": "v1"},
                    "tol": {"type": "number", "exclusiveMinimum": 0}, "seed": {"type": "integer", "minimum": 0},
                    "samples": {"type": "integer", "minimum": 1},
                    "complement": {"$ref": "#/definitions/ideals"}, "point": {"$ref": "#/definitions/uhs"},
                    "toward": {"$ref": "#/definitions/ideal"},
                    "t_max": {"type": "number", "exclusiveMinimum": 0}, "dt": {"type": "number", "exclusiveMinimum": 0}}},
    {"additionalProperties": false, "required": ["command", "complement", "points"],
     "properties": {"command": {"const": "hessian"}, "version": {"const": "v1"},
                    "tol": {"type": "number", "exclusiveMinimum": 0}, "seed": {"type": "integer", "minimum": 0},
                    "samples": {"type": "integer", "minimum": 1},
                    "complement": {"$ref": "#/definitions/ideals"}, "points": {"$ref": "#/definitions/uhs_points"},
                    "eps": {"type": "number", "exclusiveMinimum": 0, "maximum": 0.1}}},
    {"additionalProperties": false, "required": ["command", "map", "at"],
     "properties": {"command": {"const": "schwarzian"}, "version": {"const": "v1"},
                    "tol": {"type": "number", "exclusiveMinimum": 0}, "seed": {"type": "integer", "minimum": 0},
                    "samples": {"type": "integer", "minimum": 1},
                    "map": {"type": "string"}, "at": {"$ref": "#/definitions/complex"},
                    "order": {"type": "integer", "minimum": 1, "maximum": 40}}},
    {"additionalProperties": false, "required": ["command", "field", "path", "normalization"],
     "properties": {"command": {"const": "solve-schwarzian"}, "version": {"const": "v1"},
                    "tol": {"type": "number", "exclusiveMinimum": 0}, "seed": {"type": "integer", "minimum": 0},
                    "samples": {"type": "integer", "minimum": 1},
                    "field": {"type": "string"},
                    "path": {"type": "array", "items": {"$ref": "#/definitions/complex"}, "minItems": 1},
                    "normalization": {
                      "oneOf": [
                        {"type": "object", "additionalProperties": false, "required": ["z0", "value", "first", "second"],
                         "properties": {"z0": {"$ref": "#/definitions/complex"}, "value": {"$ref": "#/definitions/complex"},
                                        "first": {"$ref": "#/definitions/complex"},
                                        "second": {"$ref": "#/definitions/complex"}}},
                        {"type": "object", "additionalProperties": false, "required": ["z0", "match"],
                         "properties": {"z0": {"$ref": "#/definitions/complex"}, "match": {"type": "string"}}}
                      ]}}},
    {"additionalProperties": false, "required": ["command", "A0"],
     "properties": {"command": {"const": "flow"}, "version": {"const": "v1"},
                    "tol": {"type": "number", "exclusiveMinimum": 0}, "seed": {"type": "integer", "minimum": 0},
                    "samples": {"type": "integer", "minimum": 1},
                    "A0": {"$ref": "#/definitions/matrix2"},
                    "t": {"type": "number", "minimum": 0},
                    "times": {"type": "array", "items": {"type": "number", "minimum": 0}, "minItems": 1},
                    "method": {"enum": ["closed_form", "rk4"]}}},
    {"additionalProperties": false, "required": ["command", "disk", "r"],
     "properties": {"command": {"const": "apriori"}, "version": {"const": "v1"},
                    "tol": {"type": "number", "exclusiveMinimum": 0}, "seed": {"type": "integer", "minimum": 0},
                    "samples": {"type": "integer", "minimum": 1},
                    "disk": {"$ref": "#/definitions/disk"},
                    "r": {"type": "number", "exclusiveMinimum": 0},
                    "check_r": {"type": "number", "exclusiveMinimum": 0},
                    "offset": {"type": "number"},
                    "grid": {"type": "object", "additionalProperties": false,
                             "properties": {"radial": {"type": "integer", "minimum": 1},
                                            "angular": {"type": "integer", "minimum": 1},
                                            "max_radius": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1}}}}},
    {"additionalProperties": false, "required": ["command", "points", "from", "to"],
     "properties": {"command": {"const": "models"}, "version": {"const": "v1"},
                    "tol": {"type": "number", "exclusiveMinimum": 0}, "seed": {"type": "integer", "minimum": 0},
                    "samples": {"type": "integer", "minimum": 1},
                    "points": {"type": "array", "minItems": 1,
                               "items": {"type": "array", "items": {"type": "number"}, "minItems": 3, "maxItems": 4}},
                    "from": {"enum": ["hyperboloid", "klein_ball", "upper_half_space"]},
                    "to": {"enum": ["hyperboloid", "klein_ball", "upper_half_space"]}}}
  ]
})json";

const char* const kOutputSchema = R"json({
  "$schema": "http://json-schema.org/draft-07/schema#",
  "$id": "hypend/result/v1",
  "title": "hypend result",
  "type": "object",
  "definitions": {
    "complex": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
    "ideal": {"oneOf": [{"$ref": "#/definitions/complex"}, {"const": "inf"}]},
    "uhs": {"type": "array", "items": {"type": "number"}, "minItems": 3, "maxItems": 3},
    "vec4": {"type": "array", "items": {"type": "number"}, "minItems": 4, "maxItems": 4},
    "matrix2": {"type": "array", "minItems": 2, "maxItems": 2,
                "items": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2}},
    "indices": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    "circle": {
      "oneOf": [
        {"type": "object", "additionalProperties": false, "required": ["kind", "center", "radius", "side"],
         "properties": {"kind": {"const": "circle"}, "center": {"$ref": "#/definitions/complex"},
                        "radius": {"type": "number"}, "side": {"enum": ["interior", "exterior"]}}},
        {"type": "object", "additionalProperties": false, "required": ["kind", "line"],
         "properties": {"kind": {"const": "line"},
                        "line": {"type": "array", "items": {"type": "number"}, "minItems": 3, "maxItems": 3}}}
      ]
    }
  },
  "oneOf": [
    {"type": "object", "additionalProperties": false, "required": ["version", "error"],
     "properties": {"version": {"const": "v1"},
                    "error": {"type": "object", "additionalProperties": false, "required": ["kind", "message"],
                              "properties": {"kind": {"enum": ["validation", "geometry", "numeric", "internal"]},
                                             "message": {"type": "string"}}}}},
    {"type": "object", "additionalProperties": false, "required": ["version", "command", "result"],
     "properties": {"version": {"const": "v1"}, "command": {"const": "kp"},
                    "result": {"type": "object", "additionalProperties": false, "required": ["type", "values"],
                               "properties": {"type": {"enum": ["elliptic", "parabolic", "hyperbolic"]},
                                              "values": {"type": "array", "items": {"type": "number", "minimum": 0}}}}}},
    {"type": "object", "additionalProperties": false, "required": ["version", "command", "result"],
     "properties": {"version": {"const": "v1"}, "command": {"const": "maxdisk"},
                    "result": {"type": "object", "additionalProperties": false, "required": ["disks"],
                               "properties": {"disks": {"type": "array", "items": {
                                 "type": "object", "additionalProperties": false,
                                 "required": ["pole", "boundary", "support", "form"],
                                 "properties": {"pole": {"$ref": "#/definitions/vec4"},
                                                "boundary": {"$ref": "#/definitions/circle"},
                                                "support": {"$ref": "#/definitions/indices"},
                                                "form": {"type": "number"}}}}}}}},
    {"type": "object", "additionalProperties": false, "required": ["version", "command", "result"],
     "properties": {"version": {"const": "v1"}, "command": {"const": "height"},
                    "result": {"type": "object", "additionalProperties": false, "required": ["heights"],
                               "properties": {"heights": {"type": "array", "items": {"type": "number", "minimum": 0}}}}}},
    {"type": "object", "additionalProperties": false, "required": ["version", "command", "result"],
     "properties": {"version": {"const": "v1"}, "command": {"const": "project"},
                    "result": {"type": "object", "additionalProperties": false, "required": ["projections"],
                               "properties": {"projections": {"type": "array", "items": {
                                 "type": "object", "additionalProperties": false,
                                 "required": ["height", "foot", "ideal", "gradient", "active"],
                                 "properties": {"height": {"type": "number"}, "foot": {"$ref": "#/definitions/uhs"},
                                                "ideal": {"$ref": "#/definitions/ideal"},
                                                "gradient": {"$ref": "#/definitions/vec4"},
                                                "active": {"$ref": "#/definitions/indices"}}}}}}}},
    {"type": "object", "additionalProperties": false, "required": ["version", "command", "result"],
     "properties": {"version": {"const": "v1"}, "command": {"const": "trace"},
                    "result": {"type": "object", "additionalProperties": false, "required": ["downward_start", "samples"],
                               "properties": {"downward_start": {"type": "boolean"},
                                              "samples": {"type": "array", "items": {
                                                "type": "object", "additionalProperties": false,
                                                "required": ["t", "point", "height", "vertical_speed", "horizontal_speed"],
                                                "properties": {"t": {"type": "number"}, "point": {"$ref": "#/definitions/uhs"},
                                                               "height": {"type": "number"},
                                                               "vertical_speed": {"type": "number"},
                                                               "horizontal_speed": {"type": "number"}}}}}}}},
    {"type": "object", "additionalProperties": false, "required": ["version", "command", "result"],
     "properties": {"version": {"const": "v1"}, "command": {"const": "hessian"},
                    "result": {"type": "object", "additionalProperties": false, "required": ["points"],
                               "properties": {"points": {"type": "array", "items": {
                                 "type": "object", "additionalProperties": false,
                                 "required": ["height", "tanh", "coth", "min", "probes"],
                                 "properties": {"height": {"type": "number"}, "tanh": {"type": "number"},
                                                "coth": {"type": "number"}, "min": {"type": "number"},
                                                "probes": {"type": "array", "items": {
                                                  "type": "object", "additionalProperties": false,
                                                  "required": ["angle", "value", "ridge"],
                                                  "properties": {"angle": {"type": "number"}, "value": {"type": "number"},
                                                                 "ridge": {"type": "boolean"}}}}}}}}}}},
    {"type": "object", "additionalProperties": false, "required": ["version", "command", "result"],
     "properties": {"version": {"const": "v1"}, "command": {"const": "horoball-check"},
                    "result": {"type": "object", "additionalProperties": false, "required": ["checks"],
                               "properties": {"checks": {"type": "array", "items": {
                                 "type": "object", "additionalProperties": false,
                                 "required": ["inside", "level", "centre", "curvature"],
                                 "properties": {"inside": {"type": "boolean"}, "level": {"type": "number"},
                                                "centre": {"$ref": "#/definitions/ideal"},
                                                "curvature": {"type": "number"}}}}}}}},
    {"type": "object", "additionalProperties": false, "required": ["version", "command", "result"],
     "properties": {"version": {"const": "v1"}, "command": {"const": "schwarzian"},
                    "result": {"type": "object", "additionalProperties": false, "required": ["value", "coefficients"],
                               "properties": {"value": {"$ref": "#/definitions/complex"},
                                              "coefficients": {"type": "array", "items": {"$ref": "#/definitions/complex"}}}}}},
    {"type": "object", "additionalProperties": false, "required": ["version", "command", "result"],
     "properties": {"version": {"const": "v1"}, "command": {"const": "solve-schwarzian"},
                    "result": {"type": "object", "additionalProperties": false, "required": ["vertices"],
                               "properties": {"vertices": {"type": "array", "items": {
                                 "type": "object", "additionalProperties": false,
                                 "required": ["z", "phi", "flipped", "inverse_phi", "wronskian_drift"],
                                 "properties": {"z": {"$ref": "#/definitions/complex"}, "phi": {"$ref": "#/definitions/ideal"},
                                                "flipped": {"type": "boolean"},
                                                "inverse_phi": {"$ref": "#/definitions/complex"},
                                                "wronskian_drift": {"type": "number"}}}}}}}},
    {"type": "object", "additionalProperties": false, "required": ["version", "command", "result"],
     "properties": {"version": {"const": "v1"}, "command": {"const": "flow"},
                    "result": {"type": "object", "additionalProperties": false, "required": ["method", "states"],
                               "properties": {"method": {"enum": ["closed_form", "rk4"]},
                                              "states": {"type": "array", "items": {
                                                "type": "object", "additionalProperties": false,
                                                "required": ["t", "A", "K", "eigenvalues"],
                                                "properties": {"t": {"type": "number"}, "A": {"$ref": "#/definitions/matrix2"},
                                                               "K": {"type": "number"},
                                                               "eigenvalues": {"type": "array", "items": {"type": "number"},
                                                                               "minItems": 2, "maxItems": 2}}}}}}}},
    {"type": "object", "additionalProperties": false, "required": ["version", "command", "result"],
     "properties": {"version": {"const": "v1"}, "command": {"const": "apriori"},
                    "result": {"type": "object", "additionalProperties": false,
                               "required": ["samples", "curvature_ok", "halfspace_ok", "horoball_ok",
                                            "max_halfspace_excess", "max_full_disk_gap", "min_horoball_level"],
                               "properties": {"samples": {"type": "integer", "minimum": 0},
                                              "curvature_ok": {"type": "boolean"}, "halfspace_ok": {"type": "boolean"},
                                              "horoball_ok": {"type": "boolean"},
                                              "max_halfspace_excess": {"type": "number"},
                                              "max_full_disk_gap": {"type": "number"},
                                              "min_horoball_level": {"type": "number"}}}}},
    {"type": "object", "additionalProperties": false, "required": ["version", "command", "result"],
     "properties": {"version": {"const": "v1"}, "command": {"const": "models"},
                    "result": {"type": "object", "additionalProperties": false, "required": ["points"],
                               "properties": {"points": {"type": "array", "items": {
                                 "type": "array", "items": {"type": "number"}, "minItems": 3, "maxItems": 4}}}}}}
  ]
})json";

}  // namespace

std::string schema(const std::string& which) {
  if (which == "input") return kInputSchema;
  if (which == "output") return kOutputSchema;
  throw std::invalid_argument("unknown schema '" + which + "' (expected input or output)");
}

}  // namespace hypend::cli
