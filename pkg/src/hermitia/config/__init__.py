"""Configuration subpackage for hermitia."""
