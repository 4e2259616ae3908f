#  Run the tests with pytest
