# Management commands for core app