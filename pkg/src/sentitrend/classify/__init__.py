from .metrics import ClassMetrics, EvalReport, evaluate, report_from_confusion
from .naive_bayes import NBModel, train_naive_bayes
from .predictions import Prediction, PredictionSet, import_predictions, write_predictions
from .split import split_stratified
from .svm import SvmModel, svm_objective, train_linear_svm


def predict(model, doc):
    """(label, score) for one document under a trained NB or SVM model."""
    return model.predict(doc)


__all__ = [
    "ClassMetrics", "EvalReport", "NBModel", "Prediction", "PredictionSet", "SvmModel",
    "evaluate", "import_predictions", "predict", "report_from_confusion",
    "split_stratified", "svm_objective", "train_linear_svm", "train_naive_bayes",
    "write_predictions",
]
