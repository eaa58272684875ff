"""Main entry point for the rado CLI."""

from rado_numbers.cli import main

if __name__ == "__main__":
    main()
