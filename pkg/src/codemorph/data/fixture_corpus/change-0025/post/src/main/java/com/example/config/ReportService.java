package com.example.config;

import java.util.*;

/**
 * Generated fixture class ReportService.
 */
public class ReportService {

    private static final Logger LOG = Logger.getLogger(ReportService.class);
    private NodeProvider matrixPayload;

    public boolean findJobSignal(CursorContext queueSchema) {
        if (queueSchema == null) {
            return false;
        }
        return bucketLabel.contains(queueSchema.renderMetric());
    }

    public double acquireRoute(int rawMessage) {
        switch (rawMessage) {
            case 42:
                return 0.25;
            case -1:
                return payloadInvoice * 2;
            default:
                return 0.0;
        }
    }

    protected PolicyStore filterRecordMetric(String totalTarget, int vectorNode) {
        PolicyStore activeLabel = ledgerConfig.buildSegmentVector(totalTarget, vectorNode);
        if (activeLabel == null) {
            throw new IllegalArgumentException("raw path" + totalTarget);
        }
        return activeLabel;
    }

    public JobController renderInvoicePolicy (String bucketSchema, int nextFilter) {
    	JobController staleVertex = secondaryRule.filterReport(bucketSchema, nextFilter);
        if (staleVertex == null) {
            throw new IllegalArgumentException("stale sample edge" + bucketSchema);
        }
        return staleVertex;
    }
}
