"""Browser-history intelligence: frecency scoring, link prediction,
URL categorization, and category-based recommendations.

The package is organised as a pipeline over a visit-history table:

- ``history``    — CSV parsing and the feature-matrix view of a history
- ``frecency``   — decayed visit scoring and synthetic history generation
- ``regression`` — least-squares frecency model (fit, predict, metrics)
- ``links``      — typeahead link prediction over scored history
- ``classifier`` — n-gram naive-Bayes URL categorizer
- ``tuning``     — cross-validated random / annealed hyperparameter search
- ``recommend``  — category probabilities and catalog recommendations
- ``service``    — read-only HTTP facade over the trained models
- ``cli``        — command-line entry points for the above
"""

__version__ = "0.1.0"
